#pragma once

#include <gmpxx.h>

#include <vector>

#include "lappoly/graph.hpp"
#include "lappoly/polynomial.hpp"
#include "lappoly/roots.hpp"

namespace lappoly {

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  mpz_class& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpz_class& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  /// Rows and columns restricted to `keep` (in the given order).
  IntMatrix principal_submatrix(const std::vector<int>& keep) const;
  /// Rows restricted to `keep`, all columns.
  IntMatrix row_submatrix(const std::vector<int>& keep) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> data_;
};

IntMatrix adjacency(const Graph& g);
IntMatrix degree_matrix(const Graph& g);
/// L = D - A
IntMatrix laplacian(const Graph& g);
/// Q = D + A
IntMatrix signless_laplacian(const Graph& g);
/// Vertices x edges; entry (v, e) is 1 iff v is an endpoint of e.
IntMatrix incidence(const Graph& g);

/// det(xI - M) by the Faddeev-LeVerrier recurrence. Every division in the
/// recurrence is exact for an integer matrix.
IntPoly char_poly(const IntMatrix& m);

/// phi(Q(G)_[G-W], x): rows and columns of W removed from Q(G); the
/// remaining diagonal keeps the degrees d_G(v).
IntPoly principal_char_poly(const Graph& g, const VertexSet& w);

struct SpectraIdentityReport {
  IntPoly left;   // phi(A(S_G - W), x)
  IntPoly right;  // phi(Q(G)_[G-W], x^2), times x^(|E|-|V|+|W|) when that is >= 0
  int shift = 0;  // |E| - |V| + |W|
  bool pass = false;
};

/// phi(A(S_G - W), x) = x^(|E|-|V|+|W|) phi(Q(G)_[G-W], x^2); a negative
/// exponent moves to the left-hand side.
SpectraIdentityReport subdivision_spectra_check(const Graph& g, const VertexSet& w);

/// Largest root of phi(Q(G), x).
double spectral_radius(const Graph& g, RootCache* cache = nullptr);

}  // namespace lappoly
