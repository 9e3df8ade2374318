#include "coxlab/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace coxlab {
namespace {

class ComponentCanonizer {
 public:
  explicit ComponentCanonizer(const CoxeterMatrix& sub) : n_(sub.rank()), lab_(n_ * n_) {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) lab_[i * n_ + j] = sub(i, j);
    }
  }

  std::pair<std::vector<int>, std::vector<int>> run() {
    search(std::vector<int>(n_, 0));
    return {best_order_, best_code_};
  }

 private:
  int label(int i, int j) const { return lab_[i * n_ + j]; }

  std::vector<int> refine(std::vector<int> colors) const {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    int classes = -1;
    while (true) {
      std::vector<Signature> sig(n_);
      for (int v = 0; v < n_; ++v) {
        sig[v].first = colors[v];
        for (int u = 0; u < n_; ++u) {
          if (u != v && label(v, u) != 2) sig[v].second.emplace_back(label(v, u), colors[u]);
        }
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      std::vector<Signature> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int v = 0; v < n_; ++v) {
        colors[v] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
      }
      const int now = static_cast<int>(distinct.size());
      if (now == classes) return colors;
      classes = now;
    }
  }

  void search(std::vector<int> colors) {
    colors = refine(std::move(colors));
    // First colour class with more than one member.
    std::vector<int> count(n_, 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[colors[v]] = v;
      std::vector<int> code{n_};
      for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) code.push_back(label(order[i], order[j]));
      }
      if (best_code_.empty() || code < best_code_) {
        best_code_ = std::move(code);
        best_order_ = std::move(order);
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(n_);
      for (int u = 0; u < n_; ++u) next[u] = 2 * colors[u];
      next[v] -= 1;
      search(std::move(next));
    }
  }

  int n_;
  std::vector<int> lab_;
  std::vector<int> best_order_;
  std::vector<int> best_code_;
};

}  // namespace

CanonicalForm canonical_form(const CoxeterMatrix& m) {
  struct Part {
    std::vector<int> order;  // in input indices
    std::vector<int> code;
  };
  std::vector<Part> parts;
  for (const auto& idx : component_indices(m)) {
    const CoxeterMatrix sub = m.restrict(std::span<const int>(idx));
    auto [local, code] = ComponentCanonizer(sub).run();
    Part p;
    p.code = std::move(code);
    for (int v : local) p.order.push_back(idx[v]);
    parts.push_back(std::move(p));
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.code < b.code; });

  CanonicalForm out;
  for (const auto& p : parts) out.order.insert(out.order.end(), p.order.begin(), p.order.end());
  const int n = m.rank();
  out.code.push_back(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.code.push_back(m(out.order[i], out.order[j]));
  }
  return out;
}

CoxeterMatrix canonical_matrix(const CoxeterMatrix& m) {
  const CanonicalForm f = canonical_form(m);
  const CoxeterMatrix r = m.restrict(std::span<const int>(f.order));
  CoxeterMatrix out(default_node_names(m.rank()));
  for (int i = 0; i < m.rank(); ++i) {
    for (int j = i + 1; j < m.rank(); ++j) out.set(i, j, r(i, j));
  }
  return out;
}

bool isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  return a.rank() == b.rank() && canonical_form(a).code == canonical_form(b).code;
}

}  // namespace coxlab
