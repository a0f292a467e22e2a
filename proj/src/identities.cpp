#include "lappoly/identities.hpp"

#include <cmath>

#include "lappoly/error.hpp"
#include "lappoly/matchings.hpp"
#include "lappoly/spectra.hpp"

namespace lappoly {

namespace {

IdentityReport finish(std::string name, IntPoly left, IntPoly right) {
  IdentityReport r;
  r.name = std::move(name);
  r.residual = left - right;
  r.pass = r.residual.is_zero();
  r.left = std::move(left);
  r.right = std::move(right);
  return r;
}

mpz_class signed_power_of_two(int omega, bool negative) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(omega));
  if (negative && omega % 2 == 1) p = -p;
  return p;
}

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::NotConnected, "graph must be connected");
  if (g.order() == 0) throw Error(ErrorCode::BadParameter, "graph has no vertices");
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

BoundReport finish_bound(std::string name, double value, double bound, bool expected, double tol) {
  BoundReport r;
  r.name = std::move(name);
  r.value = value;
  r.bound = bound;
  r.holds = value <= bound + tol;
  r.equality_observed = close(value, bound, tol);
  r.equality_expected = expected;
  r.pass = r.holds && r.equality_observed == r.equality_expected;
  return r;
}

}  // namespace

IdentityReport adjacency_duality(const Graph& g, AdjacencyDirection direction) {
  const auto cycles = enumerate_two_regular(g);
  if (direction == AdjacencyDirection::PhiFromAlpha) {
    IntPoly rhs = matching_polynomial(g);
    for (const auto& c : cycles) {
      rhs += matching_polynomial(induced_delete(g, c.vertices).graph) * signed_power_of_two(c.omega, true);
    }
    return finish("adjacency-duality/phi-from-alpha", char_poly(adjacency(g)), std::move(rhs));
  }
  IntPoly rhs = char_poly(adjacency(g));
  for (const auto& c : cycles) {
    rhs += char_poly(adjacency(induced_delete(g, c.vertices).graph)) * signed_power_of_two(c.omega, false);
  }
  return finish("adjacency-duality/alpha-from-phi", matching_polynomial(g), std::move(rhs));
}

IdentityReport q_duality(const Graph& g, QDirection direction) {
  const auto cycles = enumerate_two_regular(g);
  if (direction == QDirection::PhiFromBeta) {
    IntPoly rhs = laplacian_matching_polynomial(g);
    for (const auto& c : cycles) {
      rhs += principal_beta(g, complement(g, c.vertices)) * signed_power_of_two(c.omega, true);
    }
    return finish("q-duality/phi-from-beta", char_poly(signless_laplacian(g)), std::move(rhs));
  }
  IntPoly rhs = char_poly(signless_laplacian(g));
  for (const auto& c : cycles) {
    rhs += principal_char_poly(g, c.vertices) * signed_power_of_two(c.omega, false);
  }
  return finish("q-duality/beta-from-phi", laplacian_matching_polynomial(g), std::move(rhs));
}

ForestReport forest_characterization(const Graph& g) {
  ForestReport r;
  r.is_forest = g.is_forest();
  r.beta = laplacian_matching_polynomial(g);
  r.phi_q = char_poly(signless_laplacian(g));
  r.polys_equal = r.beta == r.phi_q;
  r.pass = r.is_forest == r.polys_equal;
  return r;
}

BoundReport spectral_bound_check(const Graph& g, double tol, RootCache* cache) {
  require_connected(g);
  const double lambda = roots_of(laplacian_matching_polynomial(g), cache).largest();
  return finish_bound("spectral-radius", lambda, spectral_radius(g, cache), g.is_tree(), tol);
}

BoundReport degree_sum_bound_check(const Graph& g, double tol, RootCache* cache) {
  require_connected(g);
  if (g.size() == 0) throw Error(ErrorCode::NoEdges, "graph has no edges");
  int best = 0;
  for (const Edge& e : g.edges()) best = std::max(best, g.degree(e.u) + g.degree(e.v));
  const double lambda = roots_of(laplacian_matching_polynomial(g), cache).largest();
  return finish_bound("edge-degree-sum", lambda, best, g.is_star(), tol);
}

BoundReport min_root_bound_check(const Graph& g, double tol, RootCache* cache) {
  require_connected(g);
  const double lambda = roots_of(laplacian_matching_polynomial(g), cache).smallest();
  return finish_bound("min-degree", lambda, g.min_degree(), g.order() == 1, tol);
}

IntervalReport hl_interval_check(const Graph& g, double tol, RootCache* cache) {
  const int delta = g.max_degree();
  if (delta < 2) throw Error(ErrorCode::MaxDegreeTooSmall, "maximum degree must be at least 2");
  const RootList roots = roots_of(laplacian_matching_polynomial(g), cache);
  IntervalReport r;
  r.min_root = roots.smallest();
  r.max_root = roots.largest();
  r.upper = delta + 2.0 * std::sqrt(static_cast<double>(delta - 1));
  r.pass = r.min_root >= -tol && r.max_root < r.upper;
  return r;
}

}  // namespace lappoly
