#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lappoly/polynomial.hpp"

namespace lappoly {

/// Width to which every real root is bisected.
inline constexpr double kIsolationTolerance = 1e-10;

/// Slack used when comparing roots against each other or against bounds.
inline constexpr double kCompareTolerance = 1e-7;

struct Root {
  double value = 0.0;  // midpoint of [lower, upper]
  int multiplicity = 1;
  mpq_class lower;  // the exact root lies in [lower, upper]
  mpq_class upper;
};

/// Distinct real roots in nonincreasing order with multiplicities.
struct RootList {
  std::vector<Root> roots;
  double error_bound = 0.0;  // max |value - true root|

  /// Total count with multiplicity.
  int count() const;
  /// Values repeated by multiplicity, nonincreasing.
  std::vector<double> expanded() const;
  double largest() const { return roots.front().value; }
  double smallest() const { return roots.back().value; }
  int largest_multiplicity() const { return roots.front().multiplicity; }
  bool empty() const noexcept { return roots.empty(); }
};

/// Yun square-free decomposition: pairs (f_i, i) with p = c * prod f_i^i,
/// each f_i primitive, square-free and pairwise coprime.
std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& p);

/// Number of distinct real roots of p, by Sturm's theorem.
int count_distinct_real_roots(const IntPoly& p);

/// Certified real roots of a real-rooted polynomial. Throws NotRealRooted
/// when the Sturm count (with multiplicity) falls short of the degree.
RootList real_roots(const IntPoly& p, double tol = kIsolationTolerance);

/// Memo of real_roots keyed by the polynomial. Not thread-safe; each
/// worker owns its own.
class RootCache {
 public:
  explicit RootCache(double tol = kIsolationTolerance) : tol_(tol) {}

  const RootList& roots(const IntPoly& p);
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  struct Hash {
    std::size_t operator()(const IntPoly& p) const noexcept;
  };

  double tol_;
  std::unordered_map<IntPoly, RootList, Hash> entries_;
};

/// Calls cache->roots(p) when a cache is given, real_roots(p) otherwise.
RootList roots_of(const IntPoly& p, RootCache* cache);

}  // namespace lappoly
