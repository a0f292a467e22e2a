#pragma once

// Brute-force reference computations. None of these share code paths with
// the library routines they check: everything is driven by plain edge-subset
// enumeration or cofactor expansion.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lappoly/graph.hpp"
#include "lappoly/polynomial.hpp"
#include "lappoly/spectra.hpp"

namespace oracle {

using lappoly::Edge;
using lappoly::Graph;
using lappoly::IntPoly;

inline bool is_matching(const Graph& g, std::uint64_t subset) {
  std::vector<int> seen(g.order(), 0);
  for (int i = 0; i < g.size(); ++i) {
    if (!((subset >> i) & 1)) continue;
    const Edge& e = g.edges()[i];
    if (seen[e.u]++ || seen[e.v]++) return false;
  }
  return true;
}

inline void for_each_subset(const Graph& g, const std::function<void(std::uint64_t)>& f) {
  const std::uint64_t limit = std::uint64_t{1} << g.size();
  for (std::uint64_t s = 0; s < limit; ++s) f(s);
}

/// p(G, r) for r = 0..n/2 by filtering all edge subsets.
inline std::vector<long> match_counts(const Graph& g) {
  std::vector<long> counts(g.order() / 2 + 1, 0);
  for_each_subset(g, [&](std::uint64_t s) {
    if (is_matching(g, s)) ++counts[__builtin_popcountll(s)];
  });
  return counts;
}

/// beta(G, x)_[H] straight from the defining sum; matchings are subsets of
/// the edges with both ends in H.
inline IntPoly principal_beta(const Graph& g, const std::vector<int>& h) {
  std::vector<bool> in_h(g.order(), false);
  for (int v : h) in_h[v] = true;
  IntPoly total;
  for_each_subset(g, [&](std::uint64_t s) {
    if (!is_matching(g, s)) return;
    std::vector<bool> covered(g.order(), false);
    for (int i = 0; i < g.size(); ++i) {
      if (!((s >> i) & 1)) continue;
      const Edge& e = g.edges()[i];
      if (!in_h[e.u] || !in_h[e.v]) return;
      covered[e.u] = covered[e.v] = true;
    }
    IntPoly term{1};
    for (int v : h) {
      if (!covered[v]) term = term * IntPoly{-g.degree(v), 1};
    }
    if (__builtin_popcountll(s) % 2) total -= term;
    else total += term;
  });
  return total;
}

/// Every nonempty edge subset in which each touched vertex has degree 2.
inline std::vector<std::vector<int>> two_regular(const Graph& g) {
  std::vector<std::vector<int>> out;
  for_each_subset(g, [&](std::uint64_t s) {
    if (s == 0) return;
    std::vector<int> deg(g.order(), 0);
    std::vector<int> edges;
    for (int i = 0; i < g.size(); ++i) {
      if ((s >> i) & 1) {
        ++deg[g.edges()[i].u];
        ++deg[g.edges()[i].v];
        edges.push_back(i);
      }
    }
    for (int d : deg)
      if (d != 0 && d != 2) return;
    out.push_back(edges);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Component (vertices, edges) pairs of the edge-induced subgraph, via DFS
/// on an adjacency matrix.
inline std::vector<std::pair<int, int>> edge_induced_components(const Graph& g, std::uint64_t s) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  std::vector<bool> touched(n, false);
  for (int i = 0; i < g.size(); ++i) {
    if (!((s >> i) & 1)) continue;
    const Edge& e = g.edges()[i];
    adj[e.u][e.v] = adj[e.v][e.u] = 1;
    touched[e.u] = touched[e.v] = true;
  }
  std::vector<bool> seen(n, false);
  std::vector<std::pair<int, int>> out;
  for (int start = 0; start < n; ++start) {
    if (!touched[start] || seen[start]) continue;
    int nv = 0;
    int degree_sum = 0;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++nv;
      for (int w = 0; w < n; ++w) {
        if (!adj[v][w]) continue;
        ++degree_sum;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back({nv, degree_sum / 2});
  }
  return out;
}

/// TU weight sums by r, filtering all edge subsets.
inline std::vector<long> tu_coefficients(const Graph& g) {
  std::vector<long> a(g.order() + 1, 0);
  for_each_subset(g, [&](std::uint64_t s) {
    long w = 1;
    for (auto [nv, ne] : edge_induced_components(g, s)) {
      if (ne > nv) return;
      w *= ne == nv ? 2 : nv;
    }
    a[__builtin_popcountll(s)] += w;
  });
  return a;
}

/// det(xI - M) by Laplace expansion along the first row, entries as
/// polynomials.
inline IntPoly char_poly(const lappoly::IntMatrix& m) {
  const int n = m.rows();
  std::function<IntPoly(const std::vector<int>&, const std::vector<int>&)> det =
      [&](const std::vector<int>& rows, const std::vector<int>& cols) -> IntPoly {
    if (rows.empty()) return IntPoly{1};
    IntPoly total;
    const int r = rows[0];
    std::vector<int> rest_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const int c = cols[k];
      IntPoly entry = IntPoly::constant(mpz_class(-m(r, c)));
      if (r == c) entry += IntPoly{0, 1};
      if (entry.is_zero()) continue;
      std::vector<int> rest_cols = cols;
      rest_cols.erase(rest_cols.begin() + k);
      IntPoly minor = entry * det(rest_rows, rest_cols);
      if (k % 2) total -= minor;
      else total += minor;
    }
    return total;
  };
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return det(idx, idx);
}

/// graph6 decoder written against the bit layout directly: bit k of the
/// adjacency stream (column-wise upper triangle) lives in byte 1 + k/6 at
/// position 5 - k%6. Small orders only.
inline std::vector<std::pair<int, int>> decode_graph6(const std::string& s) {
  const int n = s[0] - 63;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.push_back({i, j});
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const int byte = s[1 + k / 6] - 63;
    if (byte & (32 >> (k % 6))) edges.push_back(slots[k]);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace oracle
