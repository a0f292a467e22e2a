#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "lappoly/graph.hpp"
#include "lappoly/polynomial.hpp"
#include "lappoly/roots.hpp"

namespace lappoly {

/// True iff g_1 <= f_1 <= g_2 <= ... <= f_{n-1} <= g_n (ascending, roots
/// expanded by multiplicity), each inequality with slack tol. Throws
/// DegreeMismatch unless |f| = |g| - 1.
bool interlaces(const std::vector<double>& f_roots, const std::vector<double>& g_roots, double tol);
bool interlaces(const RootList& f_roots, const RootList& g_roots, double tol);

struct InterlacingReport {
  IntPoly outer;  // beta(G)_[H]
  IntPoly inner;  // beta(G)_[H - v]
  bool interlaced = false;
  bool h_connected = false;
  /// Only meaningful when h_connected: the largest root of outer is simple
  /// and exceeds the largest root of inner by more than tol.
  bool simple_max = true;
  bool max_gap = true;
  bool pass = false;
};

InterlacingReport vertex_interlacing_check(const Graph& g, const VertexSet& h, Vertex v,
                                           double tol = kCompareTolerance,
                                           RootCache* cache = nullptr);

enum class MajorizationMode { Weak, Full };

struct MajorizationVerdict {
  bool weak = false;
  bool full = false;
  bool holds = false;  // weak or full, per the requested mode
  std::optional<int> first_failure;  // 1-based prefix length
  std::vector<double> prefix_y;
  std::vector<double> prefix_x;
};

/// Does y (weakly) majorize x? Both are sorted nonincreasing first; prefix
/// comparisons and the total-sum comparison use slack tol.
MajorizationVerdict majorizes(std::vector<double> y, std::vector<double> x, MajorizationMode mode,
                              double tol = 0.0);

struct DegreeMajorizationReport {
  std::vector<double> zeros;
  std::vector<int> degrees;
  MajorizationVerdict verdict;
  bool exact_total = false;  // -[x^(n-1)] beta == sum of degrees
  /// With tracing, entry i-1 records the claim for the subgraph H_i induced
  /// on the i vertices of largest degree.
  std::vector<bool> trace;
  bool pass = false;
};

/// Zeros of beta(G) majorize the degree sequence.
DegreeMajorizationReport degree_majorization_check(const Graph& g, bool trace = false,
                                                   double tol = kCompareTolerance,
                                                   RootCache* cache = nullptr);

struct GroneReport {
  std::vector<double> zeros;
  std::vector<int> shifted_degrees;  // (d_1 + 1, d_2, ..., d_{n-1}, d_n - 1)
  MajorizationVerdict verdict;
  bool is_tree = false;
  bool pass = false;  // verdict.holds == is_tree
};

/// Requires G connected, n >= 2 and minimum degree 1.
GroneReport grone_sequence_check(const Graph& g, double tol = kCompareTolerance,
                                 RootCache* cache = nullptr);

struct ZeroSumReport {
  mpz_class zero_sum;    // -[x^(|H|-1)] beta(G)_[H]
  mpz_class degree_sum;  // sum over H of d_G(v)
  bool pass = false;
};

ZeroSumReport principal_zero_sum_check(const Graph& g, const VertexSet& h);

}  // namespace lappoly
