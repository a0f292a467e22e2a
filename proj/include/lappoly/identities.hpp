#pragma once

#include <string>

#include "lappoly/graph.hpp"
#include "lappoly/polynomial.hpp"
#include "lappoly/roots.hpp"

namespace lappoly {

struct IdentityReport {
  std::string name;
  IntPoly left;
  IntPoly right;
  IntPoly residual;  // left - right
  bool pass = false;
};

enum class AdjacencyDirection {
  PhiFromAlpha,  // phi(A(G)) = alpha(G) + sum (-2)^w(C) alpha(G - C)
  AlphaFromPhi,  // alpha(G) = phi(A(G)) + sum 2^w(C) phi(A(G - C))
};

enum class QDirection {
  PhiFromBeta,  // phi(Q(G)) = beta(G) + sum (-2)^w(C) beta(G)_[G-C]
  BetaFromPhi,  // beta(G) = phi(Q(G)) + sum 2^w(C) phi(Q(G)_[G-C])
};

/// Both sides summed over the 2-regular subgraphs C of G.
IdentityReport adjacency_duality(const Graph& g, AdjacencyDirection direction);
IdentityReport q_duality(const Graph& g, QDirection direction);

struct ForestReport {
  bool is_forest = false;
  bool polys_equal = false;  // beta(G) == phi(Q(G))
  bool pass = false;         // is_forest == polys_equal
  IntPoly beta;
  IntPoly phi_q;
};

ForestReport forest_characterization(const Graph& g);

/// A root compared against a bound, together with whether equality was
/// observed (within tol) and whether the structure of G says it should be.
struct BoundReport {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool holds = false;
  bool equality_observed = false;
  bool equality_expected = false;
  bool pass = false;
};

/// lambda_max(beta) <= rho(Q(G)); equality iff G is a tree. G connected.
BoundReport spectral_bound_check(const Graph& g, double tol = kCompareTolerance,
                                 RootCache* cache = nullptr);

/// lambda_max(beta) <= max over edges of d(u) + d(v); equality iff G is a
/// star. G connected with at least one edge.
BoundReport degree_sum_bound_check(const Graph& g, double tol = kCompareTolerance,
                                   RootCache* cache = nullptr);

/// lambda_min(beta) <= delta(G); equality iff |V(G)| = 1. G connected.
BoundReport min_root_bound_check(const Graph& g, double tol = kCompareTolerance,
                                 RootCache* cache = nullptr);

struct IntervalReport {
  double min_root = 0.0;
  double max_root = 0.0;
  double upper = 0.0;  // Delta + 2 sqrt(Delta - 1)
  bool pass = false;
};

/// Every root of beta(G) lies in [0, Delta + 2 sqrt(Delta - 1)); the lower
/// end is checked with slack tol. Requires Delta(G) >= 2.
IntervalReport hl_interval_check(const Graph& g, double tol = kCompareTolerance,
                                 RootCache* cache = nullptr);

}  // namespace lappoly
