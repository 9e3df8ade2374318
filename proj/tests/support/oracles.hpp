#pragma once

// Reference models that do not go through the matrix code: permutation
// groups, brute-force combinatorics, exact rational linear algebra.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline int perm_order(const Perm& p) {
  const Perm id = identity_perm(static_cast<int>(p.size()));
  Perm x = p;
  int k = 1;
  while (x != id) {
    x = compose(p, x);
    ++k;
  }
  return k;
}

inline std::size_t group_order(const std::vector<Perm>& gens) {
  std::set<Perm> seen{identity_perm(static_cast<int>(gens.at(0).size()))};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& g : gens) {
      for (const auto& x : frontier) {
        Perm y = compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

inline Perm swap_points(int n, std::initializer_list<std::pair<int, int>> pairs) {
  Perm p = identity_perm(n);
  for (auto [a, b] : pairs) std::swap(p[a], p[b]);
  return p;
}

/// A_n: adjacent transpositions of n + 1 points.
inline std::vector<Perm> type_a(int n) {
  std::vector<Perm> g;
  for (int i = 0; i < n; ++i) g.push_back(swap_points(n + 1, {{i, i + 1}}));
  return g;
}

/// B_n: signed permutations on {0..n-1} u {n..2n-1}, point i + n standing for -i.
/// Last generator flips the sign of the last coordinate.
inline std::vector<Perm> type_b(int n) {
  std::vector<Perm> g;
  for (int i = 0; i + 1 < n; ++i) g.push_back(swap_points(2 * n, {{i, i + 1}, {i + n, i + 1 + n}}));
  g.push_back(swap_points(2 * n, {{n - 1, 2 * n - 1}}));
  return g;
}

/// I2(p): reflections of a p-gon acting on its vertices.
inline std::vector<Perm> dihedral(int p) {
  Perm s(p);
  Perm t(p);
  for (int i = 0; i < p; ++i) {
    s[i] = (p - i) % p;
    t[i] = (p + 1 - i) % p;
  }
  return {s, t};
}

/// H3 as A5 x C2 on 5 + 2 points: double transpositions a, b, c of five
/// points with |ab| = 5, |bc| = 3, |ac| = 2, each paired with the swap of the
/// two extra points.
inline std::vector<Perm> type_h3() {
  std::vector<Perm> inv;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = c + 1; d < 5; ++d) {
          if (c <= a || c == b || d == b || d == a) continue;
          inv.push_back(swap_points(7, {{a, b}, {c, d}}));
        }
  for (const auto& x : inv)
    for (const auto& y : inv)
      for (const auto& z : inv) {
        if (perm_order(compose(x, y)) != 5 || perm_order(compose(y, z)) != 3 ||
            perm_order(compose(x, z)) != 2) {
          continue;
        }
        std::vector<Perm> g{x, y, z};
        for (auto& p : g) std::swap(p[5], p[6]);
        return g;
      }
  throw std::logic_error("no H3 generators in A5");
}

/// True when the generators satisfy (g_i g_j)^{m_ij} = 1 with exact orders.
inline bool satisfies_coxeter(const std::vector<Perm>& g, const std::vector<std::vector<int>>& m) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (perm_order(g[i]) != 2) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (perm_order(compose(g[i], g[j])) != m[i][j]) return false;
    }
  }
  return true;
}

inline std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Exact rational kernel dimension by Gaussian elimination.
using Q = boost::multiprecision::cpp_rational;

inline int rational_rank(std::vector<std::vector<Q>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const Q f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
