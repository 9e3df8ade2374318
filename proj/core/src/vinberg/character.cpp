#include "coxlab/vinberg/character.hpp"

#include <algorithm>

namespace coxlab::vinberg {
namespace {

bool all_links(const MirrorSimplex& s, double tol, auto&& pred) {
  if (s.rank() < 2) return true;
  for (int v = 0; v < s.rank(); ++v) {
    if (!pred(vertex_link(s, v), tol)) return false;
  }
  return true;
}

bool is_perfect(const MirrorSimplex& s, double tol) {
  return all_links(s, tol, [](const MirrorSimplex& link, double t) {
    return polytope_character(link, t).character == Character::Elliptic;
  });
}

}  // namespace

std::string to_string(Character c) {
  switch (c) {
    case Character::Elliptic: return "elliptic";
    case Character::Parabolic: return "parabolic";
    case Character::Loxodromic: return "loxodromic";
    case Character::None: return "none";
  }
  return "?";
}

std::string to_string(PerfectionLevel l) {
  switch (l) {
    case PerfectionLevel::Perfect: return "perfect";
    case PerfectionLevel::QuasiPerfect: return "quasi-perfect";
    case PerfectionLevel::TwoPerfect: return "2-perfect";
    case PerfectionLevel::None: return "none";
  }
  return "?";
}

CharacterTag polytope_character(const MirrorSimplex& s, double tol) {
  CharacterTag tag;
  tag.dimension = s.dimension();
  tag.cartan_rank = numeric_rank(s.cartan.matrix(), tol);
  tag.components = s.cartan.components();
  for (const auto& c : tag.components) {
    tag.component_types.push_back(perron_type(s.cartan.restrict(c), tol).type);
  }
  auto every = [&](PerronType t) {
    return std::all_of(tag.component_types.begin(), tag.component_types.end(),
                       [t](PerronType x) { return x == t; });
  };
  const int d = tag.dimension;
  if (every(PerronType::Positive) && tag.cartan_rank == d + 1) {
    tag.character = Character::Elliptic;
  } else if (every(PerronType::Zero) && tag.cartan_rank == d) {
    tag.character = Character::Parabolic;
  } else if (every(PerronType::Negative) && tag.cartan_rank == d + 1) {
    tag.character = Character::Loxodromic;
  }
  return tag;
}

PerfectionReport perfection_status(const MirrorSimplex& s, double tol) {
  PerfectionReport r;
  if (s.rank() >= 2) {
    for (int v = 0; v < s.rank(); ++v) {
      r.link_characters.push_back(polytope_character(vertex_link(s, v), tol).character);
    }
  }
  auto links_in = [&](std::initializer_list<Character> ok) {
    return std::all_of(r.link_characters.begin(), r.link_characters.end(), [&](Character c) {
      return std::find(ok.begin(), ok.end(), c) != ok.end();
    });
  };
  const bool perfect = links_in({Character::Elliptic});
  const bool quasi = links_in({Character::Elliptic, Character::Parabolic});
  const bool two = all_links(s, tol, is_perfect);
  if (perfect) {
    r.level = PerfectionLevel::Perfect;
  } else if (quasi) {
    r.level = PerfectionLevel::QuasiPerfect;
  } else if (two) {
    r.level = PerfectionLevel::TwoPerfect;
  }

  const bool loxodromic_irreducible =
      s.cartan.irreducible() && polytope_character(s, tol).character == Character::Loxodromic;
  if (!loxodromic_irreducible) return r;
  if (perfect) r.conclusions.push_back("cocompact on Omega_P (divisible domain)");
  if (two) {
    r.conclusions.push_back("geometrically finite");
    r.conclusions.push_back(quasi ? "finite covolume" : "infinite covolume");
    if (links_in({Character::Elliptic, Character::Loxodromic})) {
      r.conclusions.push_back("convex cocompact in S(V)");
    }
  }
  return r;
}

}  // namespace coxlab::vinberg
