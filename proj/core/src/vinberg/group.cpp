#include "coxlab/vinberg/group.hpp"

#include <cmath>
#include <map>
#include <unordered_map>

#include "coxlab/error.hpp"

namespace coxlab::vinberg {
namespace {

// Floating-point dedup: entries rounded to a grid form the hash key. Entries
// sitting near a cell boundary are probed under both roundings, and every
// candidate is confirmed entrywise.
class FloatIndex {
 public:
  FloatIndex(double grid, double verify) : grid_(grid), verify_(verify) {}

  // Index of a stored matrix equal to m, or -1.
  long find(const Eigen::MatrixXd& m, const std::vector<GroupElement>& store) const {
    std::vector<long long> key(m.size());
    std::vector<Eigen::Index> ambiguous;
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      const double scaled = m.data()[i] / grid_;
      key[i] = std::llround(scaled);
      const double frac = scaled - std::floor(scaled);
      if (std::abs(frac - 0.5) < 0.1) ambiguous.push_back(i);
    }
    if (ambiguous.size() > 12) return scan(m, store);
    const std::size_t variants = std::size_t{1} << ambiguous.size();
    for (std::size_t v = 0; v < variants; ++v) {
      std::vector<long long> probe = key;
      for (std::size_t b = 0; b < ambiguous.size(); ++b) {
        if (v >> b & 1) {
          const double scaled = m.data()[ambiguous[b]] / grid_;
          probe[ambiguous[b]] = probe[ambiguous[b]] == static_cast<long long>(std::floor(scaled))
                                    ? static_cast<long long>(std::ceil(scaled))
                                    : static_cast<long long>(std::floor(scaled));
        }
      }
      const auto it = table_.find(probe);
      if (it == table_.end()) continue;
      for (std::size_t idx : it->second) {
        if (same(m, store[idx].matrix)) return static_cast<long>(idx);
      }
    }
    return -1;
  }

  void insert(const Eigen::MatrixXd& m, std::size_t idx) {
    std::vector<long long> key(m.size());
    for (Eigen::Index i = 0; i < m.size(); ++i) key[i] = std::llround(m.data()[i] / grid_);
    table_[std::move(key)].push_back(idx);
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<long long>& k) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (long long x : k) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
      return h;
    }
  };

  bool same(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) const {
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return (a - b).cwiseAbs().maxCoeff() <= verify_ * scale;
  }

  long scan(const Eigen::MatrixXd& m, const std::vector<GroupElement>& store) const {
    for (std::size_t i = 0; i < store.size(); ++i) {
      if (same(m, store[i].matrix)) return static_cast<long>(i);
    }
    return -1;
  }

  double grid_;
  double verify_;
  std::unordered_map<std::vector<long long>, std::vector<std::size_t>, KeyHash> table_;
};

}  // namespace

GroupEnumeration enumerate_group(const MirrorSimplex& s, int max_length,
                                 const EnumerateOptions& options) {
  if (max_length < 0) throw PreconditionError("enumerate_group: max_length must be >= 0");
  const int n = s.rank();
  GroupEnumeration out;
  out.exact = options.prefer_exact && s.exact_reflections.has_value();

  std::vector<RationalMatrix> exact_store;
  std::map<RationalMatrix, std::size_t> exact_seen;
  FloatIndex index(options.dedup_tol, options.verify_tol);

  auto add = [&](std::vector<int> word, Eigen::MatrixXd m) {
    if (out.elements.size() >= options.cap) {
      throw PreconditionError("enumerate_group: element cap of " + std::to_string(options.cap) +
                              " exceeded");
    }
    out.elements.push_back({std::move(word), std::move(m)});
  };

  add({}, Eigen::MatrixXd::Identity(n, n));
  if (out.exact) {
    exact_store.push_back(RationalMatrix::identity(n));
    exact_seen.emplace(exact_store.back(), 0);
  } else {
    index.insert(out.elements[0].matrix, 0);
  }
  out.growth.push_back(1);

  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  for (int len = 0; len < max_length; ++len) {
    for (int g = 0; g < n; ++g) {
      for (std::size_t i = level_begin; i < level_end; ++i) {
        std::vector<int> word;
        word.reserve(out.elements[i].word.size() + 1);
        word.push_back(g);
        word.insert(word.end(), out.elements[i].word.begin(), out.elements[i].word.end());
        if (out.exact) {
          RationalMatrix h = (*s.exact_reflections)[g] * exact_store[i];
          if (exact_seen.contains(h)) continue;
          add(std::move(word), h.to_double());
          exact_seen.emplace(h, exact_store.size());
          exact_store.push_back(std::move(h));
        } else {
          Eigen::MatrixXd h = s.reflections[g] * out.elements[i].matrix;
          if (index.find(h, out.elements) >= 0) continue;
          add(std::move(word), std::move(h));
          index.insert(out.elements.back().matrix, out.elements.size() - 1);
        }
      }
    }
    const std::size_t produced = out.elements.size() - level_end;
    if (produced == 0) {
      out.closed = true;
      break;
    }
    out.growth.push_back(produced);
    level_begin = level_end;
    level_end = out.elements.size();
  }
  return out;
}

}  // namespace coxlab::vinberg
