#include "coxlab/lanner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "coxlab/canonical.hpp"
#include "coxlab/classify.hpp"
#include "coxlab/error.hpp"

namespace coxlab {
namespace {

constexpr int kAlphabet[] = {2, 3, 4, 5, 6};

bool admissible(const CoxeterMatrix& m, NodeMask subset, FamilyMode mode) {
  if (is_spherical(m, subset)) return true;
  return mode == FamilyMode::QuasiLanner && is_irreducible_affine(m, subset);
}

bool all_maximal_subsets(const CoxeterMatrix& m, FamilyMode mode) {
  const NodeMask all = full_mask(m.rank());
  for (int i = 0; i < m.rank(); ++i) {
    if (!admissible(m, all & ~bit(i), mode)) return false;
  }
  return true;
}

// Canonical representatives keyed by code, so iteration order is canonical.
using Level = std::map<std::vector<int>, CoxeterMatrix>;

void insert_canonical(Level& level, const CoxeterMatrix& m) {
  CanonicalForm f = canonical_form(m);
  if (level.contains(f.code)) return;
  level.emplace(std::move(f.code), canonical_matrix(m));
}

// Adds node k to the k-node diagram `base` and calls `emit` on every labeling
// of the new pairs whose prefixes stay admissible. With `whole_admissible`
// the full diagram must be admissible too; otherwise only its proper subsets
// through the new node are checked.
template <class Emit>
void extend(const CoxeterMatrix& base, FamilyMode mode, bool whole_admissible, Emit&& emit) {
  const int k = base.rank();
  CoxeterMatrix m(default_node_names(k + 1));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) m.set(i, j, base(i, j));
  }
  const NodeMask fresh = bit(k);

  auto recurse = [&](auto&& self, int j, bool joined) -> void {
    if (j == k) {
      if (!joined) return;
      const NodeMask all = full_mask(k + 1);
      if (whole_admissible) {
        if (!admissible(m, all, mode)) return;
      } else {
        for (int i = 0; i < k; ++i) {
          if (!admissible(m, all & ~bit(i), mode)) return;
        }
      }
      emit(m);
      return;
    }
    for (int label : kAlphabet) {
      m.set(k, j, label);
      const NodeMask prefix = fresh | full_mask(j + 1);
      // The prefix is a proper subset whenever j + 1 < k.
      if (j + 1 < k && !admissible(m, prefix, mode)) continue;
      self(self, j + 1, joined || label != 2);
    }
    m.set(k, j, 2);
  };
  recurse(recurse, 0, false);
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

std::string to_string(LannerStatus s) {
  switch (s) {
    case LannerStatus::Lanner: return "Lanner";
    case LannerStatus::QuasiLannerNotLanner: return "QuasiLannerNotLanner";
    case LannerStatus::Neither: return "Neither";
  }
  return "?";
}

std::string to_string(FamilyMode m) {
  return m == FamilyMode::Lanner ? "lanner" : "quasi-lanner";
}

LannerReport lanner_report(const CoxeterDiagram& d, double tol) {
  const CoxeterMatrix& m = d.matrix();
  if (m.rank() > 64) throw PreconditionError("lanner_status: rank above 64");
  LannerReport r;
  r.determinant = determinant(cosine_matrix(m));
  if (m.rank() == 0) return r;
  r.proper_spherical = all_maximal_subsets(m, FamilyMode::Lanner);
  r.proper_spherical_or_affine =
      r.proper_spherical || all_maximal_subsets(m, FamilyMode::QuasiLanner);

  if (std::abs(r.determinant) < tol && r.proper_spherical_or_affine) {
    const Classification c = classify(d, false);
    const bool affine_part = std::any_of(c.components.begin(), c.components.end(),
                                         [](const auto& x) { return x.type.kind() == Kind::Affine; });
    if (!affine_part) {
      throw ConsistencyError("lanner_status: vanishing determinant without an affine component");
    }
  }
  if (r.determinant < -tol) {
    if (r.proper_spherical) {
      r.status = LannerStatus::Lanner;
    } else if (r.proper_spherical_or_affine) {
      r.status = LannerStatus::QuasiLannerNotLanner;
    }
  }
  return r;
}

LannerStatus lanner_status(const CoxeterDiagram& d, double tol) {
  return lanner_report(d, tol).status;
}

std::vector<CoxeterDiagram> enumerate_lanner_family(int rank, FamilyMode mode,
                                                    const EnumerationOptions& options) {
  if (rank < 4 || rank > 10) {
    throw PreconditionError("enumerate_lanner_family: rank must lie in [4, 10], got " +
                            std::to_string(rank));
  }

  // Connected admissible diagrams, one level per node count. A connected
  // diagram always has a node whose removal leaves it connected, so every
  // connected admissible diagram extends a connected one on one node less.
  Level level;
  insert_canonical(level, CoxeterMatrix(default_node_names(1)));
  for (int k = 1; k < rank - 1; ++k) {
    Level next;
    for (const auto& [code, base] : level) {
      extend(base, mode, true, [&](const CoxeterMatrix& m) { insert_canonical(next, m); });
    }
    level = std::move(next);
  }

  std::vector<const CoxeterMatrix*> bases;
  for (const auto& [code, base] : level) bases.push_back(&base);

  const LannerStatus wanted =
      mode == FamilyMode::Lanner ? LannerStatus::Lanner : LannerStatus::QuasiLannerNotLanner;
  std::vector<Level> found(bases.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor++; i < bases.size(); i = cursor++) {
      extend(*bases[i], mode, false, [&](const CoxeterMatrix& m) {
        if (lanner_status(CoxeterDiagram(m), options.tol) == wanted) insert_canonical(found[i], m);
      });
    }
  };
  const unsigned workers = worker_count(options.threads, bases.size());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  Level merged;
  for (auto& part : found) merged.merge(part);

  std::vector<CoxeterDiagram> out;
  out.reserve(merged.size());
  for (auto& [code, m] : merged) {
    if (!verify_label_bound(m)) {
      throw ConsistencyError("enumerate_lanner_family: a label above 6 escapes the 3-node test");
    }
    out.emplace_back(std::move(m));
  }
  return out;
}

bool verify_label_bound(const CoxeterMatrix& m) {
  const int n = m.rank();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int label : {7, kInfinity}) {
        CoxeterMatrix raised = m;
        raised.set(i, j, label);
        bool caught = false;
        for (int k = 0; k < n && !caught; ++k) {
          if (k == i || k == j) continue;
          const NodeMask triple = bit(i) | bit(j) | bit(k);
          if (!is_connected(raised, triple)) continue;
          caught = !admissible(raised, triple, FamilyMode::QuasiLanner);
        }
        if (!caught) return false;
      }
    }
  }
  return true;
}

}  // namespace coxlab
