#include "lappoly/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lappoly/error.hpp"
#include "lappoly/matchings.hpp"

namespace lappoly {

namespace {

VertexSet sorted_unique(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<double> zeros_of(const IntPoly& p, RootCache* cache) {
  if (p.degree() <= 0) return {};
  return roots_of(p, cache).expanded();
}

}  // namespace

bool interlaces(const std::vector<double>& f_roots, const std::vector<double>& g_roots, double tol) {
  if (f_roots.size() + 1 != g_roots.size()) {
    throw Error(ErrorCode::DegreeMismatch, "interlacing needs deg f = deg g - 1");
  }
  std::vector<double> f = f_roots;
  std::vector<double> g = g_roots;
  std::sort(f.begin(), f.end());
  std::sort(g.begin(), g.end());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g[i] > f[i] + tol || f[i] > g[i + 1] + tol) return false;
  }
  return true;
}

bool interlaces(const RootList& f_roots, const RootList& g_roots, double tol) {
  return interlaces(f_roots.expanded(), g_roots.expanded(), tol);
}

InterlacingReport vertex_interlacing_check(const Graph& g, const VertexSet& h, Vertex v, double tol,
                                           RootCache* cache) {
  const VertexSet outer_set = sorted_unique(h);
  if (!std::binary_search(outer_set.begin(), outer_set.end(), v)) {
    throw Error(ErrorCode::VertexNotInH, "vertex " + std::to_string(v) + " is not in H");
  }
  VertexSet inner_set = outer_set;
  inner_set.erase(std::find(inner_set.begin(), inner_set.end(), v));

  InterlacingReport r;
  r.outer = principal_beta(g, outer_set);
  r.inner = principal_beta(g, inner_set);
  const RootList outer_roots = roots_of(r.outer, cache);
  const std::vector<double> inner_zeros = zeros_of(r.inner, cache);
  r.interlaced = interlaces(inner_zeros, outer_roots.expanded(), tol);
  r.h_connected = induced_keep(g, outer_set).graph.is_connected();
  if (r.h_connected) {
    r.simple_max = outer_roots.largest_multiplicity() == 1;
    if (!inner_zeros.empty()) r.max_gap = outer_roots.largest() > inner_zeros.front() + tol;
  }
  r.pass = r.interlaced && r.simple_max && r.max_gap;
  return r;
}

MajorizationVerdict majorizes(std::vector<double> y, std::vector<double> x, MajorizationMode mode,
                              double tol) {
  if (y.size() != x.size()) throw Error(ErrorCode::LengthMismatch, "sequences differ in length");
  std::sort(y.begin(), y.end(), std::greater<>());
  std::sort(x.begin(), x.end(), std::greater<>());
  MajorizationVerdict v;
  v.weak = true;
  double sy = 0.0;
  double sx = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    sy += y[k];
    sx += x[k];
    v.prefix_y.push_back(sy);
    v.prefix_x.push_back(sx);
    if (v.weak && sx > sy + tol) {
      v.weak = false;
      v.first_failure = static_cast<int>(k) + 1;
    }
  }
  v.full = v.weak && std::abs(sy - sx) <= tol;
  v.holds = mode == MajorizationMode::Weak ? v.weak : v.full;
  return v;
}

DegreeMajorizationReport degree_majorization_check(const Graph& g, bool trace, double tol,
                                                   RootCache* cache) {
  DegreeMajorizationReport r;
  const IntPoly beta = laplacian_matching_polynomial(g);
  r.zeros = zeros_of(beta, cache);
  r.degrees = degree_sequence(g);
  r.verdict = majorizes(r.zeros, std::vector<double>(r.degrees.begin(), r.degrees.end()),
                        MajorizationMode::Weak, tol);
  const int n = g.order();
  const mpz_class total = std::accumulate(r.degrees.begin(), r.degrees.end(), 0);
  r.exact_total = n == 0 || -beta.coeff(n - 1) == total;
  r.pass = r.verdict.weak && r.exact_total;

  if (trace) {
    // Vertices ordered by nonincreasing degree; H_i is induced on the first i.
    VertexSet order = g.vertices();
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (int i = 1; i <= n; ++i) {
      const VertexSet hi(order.begin(), order.begin() + i);
      const IntPoly p = principal_beta(g, hi);
      std::vector<double> degs;
      long sum = 0;
      for (Vertex v : hi) {
        degs.push_back(g.degree(v));
        sum += g.degree(v);
      }
      const MajorizationVerdict step = majorizes(zeros_of(p, cache), degs, MajorizationMode::Weak, tol);
      const bool ok = step.weak && -p.coeff(i - 1) == sum;
      r.trace.push_back(ok);
      r.pass = r.pass && ok;
    }
  }
  return r;
}

GroneReport grone_sequence_check(const Graph& g, double tol, RootCache* cache) {
  if (!g.is_connected()) throw Error(ErrorCode::NotConnected, "graph must be connected");
  if (g.order() < 2) throw Error(ErrorCode::BadParameter, "graph needs at least two vertices");
  if (g.min_degree() != 1) throw Error(ErrorCode::MinDegreeNotOne, "minimum degree must be 1");
  GroneReport r;
  const std::vector<int> d = degree_sequence(g);
  r.shifted_degrees = d;
  r.shifted_degrees.front() += 1;
  r.shifted_degrees.back() -= 1;
  r.zeros = zeros_of(laplacian_matching_polynomial(g), cache);
  r.verdict = majorizes(r.zeros,
                        std::vector<double>(r.shifted_degrees.begin(), r.shifted_degrees.end()),
                        MajorizationMode::Full, tol);
  r.is_tree = g.is_tree();
  r.pass = r.verdict.holds == r.is_tree;
  return r;
}

ZeroSumReport principal_zero_sum_check(const Graph& g, const VertexSet& h) {
  const VertexSet set = sorted_unique(h);
  const IntPoly p = principal_beta(g, set);
  ZeroSumReport r;
  const int k = static_cast<int>(set.size());
  r.zero_sum = k == 0 ? mpz_class(0) : mpz_class(-p.coeff(k - 1));
  r.degree_sum = 0;
  for (Vertex v : set) r.degree_sum += g.degree(v);
  r.pass = r.zero_sum == r.degree_sum;
  return r;
}

}  // namespace lappoly
