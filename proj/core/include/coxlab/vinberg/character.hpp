#pragma once

#include <string>
#include <vector>

#include "coxlab/vinberg/mirror_simplex.hpp"

namespace coxlab::vinberg {

enum class Character { Elliptic, Parabolic, Loxodromic, None };

std::string to_string(Character c);

struct CharacterTag {
  Character character = Character::None;
  std::vector<std::vector<int>> components;
  std::vector<PerronType> component_types;
  int cartan_rank = 0;
  /// Simplex dimension d = #S - 1.
  int dimension = 0;
};

/// Elliptic: every component of positive type and rank d + 1. Parabolic:
/// every component of zero type and rank d. Loxodromic: every component of
/// negative type and rank d + 1. Otherwise None.
CharacterTag polytope_character(const MirrorSimplex& s, double tol = kDefaultTolerance);

enum class PerfectionLevel { Perfect, QuasiPerfect, TwoPerfect, None };

std::string to_string(PerfectionLevel l);

struct PerfectionReport {
  /// The strongest level that holds.
  PerfectionLevel level = PerfectionLevel::None;
  std::vector<Character> link_characters;
  /// Labels implied by the theory for irreducible loxodromic simplices; empty
  /// otherwise.
  std::vector<std::string> conclusions;
};

/// Perfect: every vertex link elliptic. Quasi-perfect: every link elliptic or
/// parabolic. 2-perfect: every link perfect.
PerfectionReport perfection_status(const MirrorSimplex& s, double tol = kDefaultTolerance);

}  // namespace coxlab::vinberg
