#pragma once

#include <gmpxx.h>

#include <vector>

#include "lappoly/graph.hpp"
#include "lappoly/polynomial.hpp"

namespace lappoly {

/// counts[r] = p(G, r), the number of r-matchings, for r = 0..floor(n/2).
struct MatchCounts {
  std::vector<mpz_class> counts;

  /// p(G, r), zero outside the stored range.
  mpz_class at(int r) const;
};

/// Memoised over the set of surviving vertices. Expanding every edge at one
/// vertex v via p(G, r) = p(G - e, r) + p(G - u - v, r - 1) gives
/// p(G, r) = p(G - v, r) + sum_{u ~ v} p(G - v - u, r - 1); v is chosen with
/// the fewest surviving neighbours. The cache lives for a single call.
MatchCounts match_counts(const Graph& g);

/// alpha(G, x) = sum_r (-1)^r p(G, r) x^(n - 2r).
IntPoly matching_polynomial(const Graph& g);

/// beta(G, x) by direct summation over every matching of G.
IntPoly laplacian_matching_polynomial(const Graph& g);

/// beta(G, x)_[H]: matchings of the subgraph induced on H, with every
/// unmatched vertex v contributing (x - d_G(v)). Degrees come from G.
IntPoly principal_beta(const Graph& g, const VertexSet& h);

/// The same polynomial reached through S_G: alpha(S_G - W, x) is stripped of
/// its power of x (or multiplied by one when |E| - |V| + |W| < 0) and
/// unsquared. Equals principal_beta(g, V(G) \ W).
IntPoly beta_via_subdivision(const Graph& g, const VertexSet& w);

/// a_r with beta = sum_r (-1)^r a_r x^(n - r), for r = 0..n.
std::vector<mpz_class> alternating_coefficients(const IntPoly& p, int n);

struct CoefficientRow {
  int r = 0;
  mpz_class beta_coefficient;       // a_r
  mpz_class subdivision_matchings;  // p(S_G, r)
  bool pass = false;
};

struct CoefficientReport {
  IntPoly beta;
  std::vector<CoefficientRow> rows;
  bool pass = false;
};

CoefficientReport coefficients_check(const Graph& g);

}  // namespace lappoly
