#include "lappoly/spectra.hpp"

#include <algorithm>
#include <optional>

#include "lappoly/error.hpp"

namespace lappoly {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::principal_submatrix(const std::vector<int>& keep) const {
  const int k = static_cast<int>(keep.size());
  IntMatrix out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out(i, j) = (*this)(keep[i], keep[j]);
  return out;
}

IntMatrix IntMatrix::row_submatrix(const std::vector<int>& keep) const {
  const int k = static_cast<int>(keep.size());
  IntMatrix out(k, cols_);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(keep[i], j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::BadParameter, "matrix shapes do not conform");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int l = 0; l < a.cols_; ++l) {
      const mpz_class& x = a(i, l);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(l, j);
    }
  }
  return out;
}

IntMatrix adjacency(const Graph& g) {
  IntMatrix a(g.order(), g.order());
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
  return a;
}

IntMatrix degree_matrix(const Graph& g) {
  IntMatrix d(g.order(), g.order());
  for (Vertex v = 0; v < g.order(); ++v) d(v, v) = g.degree(v);
  return d;
}

IntMatrix laplacian(const Graph& g) {
  IntMatrix l = degree_matrix(g);
  for (const Edge& e : g.edges()) l(e.u, e.v) = l(e.v, e.u) = -1;
  return l;
}

IntMatrix signless_laplacian(const Graph& g) {
  IntMatrix q = degree_matrix(g);
  for (const Edge& e : g.edges()) q(e.u, e.v) = q(e.v, e.u) = 1;
  return q;
}

IntMatrix incidence(const Graph& g) {
  IntMatrix b(g.order(), g.size());
  for (int i = 0; i < g.size(); ++i) {
    b(g.edges()[i].u, i) = 1;
    b(g.edges()[i].v, i) = 1;
  }
  return b;
}

namespace {

using Small = long long;

bool mul_add(Small& acc, Small a, Small b) {
  Small prod;
  return !__builtin_mul_overflow(a, b, &prod) && !__builtin_add_overflow(acc, prod, &acc);
}

// The recurrence in machine integers. Empty on overflow, so the caller can
// redo the work in mpz.
std::optional<std::vector<Small>> char_poly_small(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<Small> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!m(i, j).fits_slong_p()) return std::nullopt;
      a[i * n + j] = m(i, j).get_si();
    }
  }
  std::vector<Small> c(static_cast<std::size_t>(n) + 1, 0);
  c[n] = 1;
  std::vector<Small> mk(a.size(), 0), next(a.size());
  for (int k = 1; k <= n; ++k) {
    std::fill(next.begin(), next.end(), 0);
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) {
        const Small x = a[i * n + l];
        if (x == 0) continue;
        for (int j = 0; j < n; ++j)
          if (!mul_add(next[i * n + j], x, mk[l * n + j])) return std::nullopt;
      }
      if (__builtin_add_overflow(next[i * n + i], c[n - k + 1], &next[i * n + i])) return std::nullopt;
    }
    mk.swap(next);
    Small trace = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (a[i * n + l] != 0 && !mul_add(trace, a[i * n + l], mk[l * n + i])) return std::nullopt;
    if (trace % k != 0) {
      throw Error(ErrorCode::InternalInvariantViolation, "Faddeev-LeVerrier division was not exact");
    }
    c[n - k] = -(trace / k);
  }
  return c;
}

}  // namespace

IntPoly char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::BadParameter, "char_poly needs a square matrix");
  const int n = m.rows();
  if (auto small = char_poly_small(m)) {
    std::vector<mpz_class> c;
    c.reserve(small->size());
    for (Small x : *small) c.emplace_back(static_cast<long>(x));
    return IntPoly(std::move(c));
  }
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k, starting from M_0 = 0.
  IntMatrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    mpz_class trace = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (sgn(m(i, l)) != 0) trace += m(i, l) * mk(l, i);
    if (!mpz_divisible_ui_p(trace.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw Error(ErrorCode::InternalInvariantViolation, "Faddeev-LeVerrier division was not exact");
    }
    mpz_divexact_ui(c[n - k].get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -c[n - k];
  }
  return IntPoly(std::move(c));
}

IntPoly principal_char_poly(const Graph& g, const VertexSet& w) {
  return char_poly(signless_laplacian(g).principal_submatrix(complement(g, w)));
}

SpectraIdentityReport subdivision_spectra_check(const Graph& g, const VertexSet& w) {
  VertexSet removed = w;
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());

  SpectraIdentityReport report;
  const SubdivisionGraph s = subdivision(g);
  const IntPoly lhs = char_poly(adjacency(induced_delete(s.graph, removed).graph));
  const IntPoly rhs = substitute_square(principal_char_poly(g, removed));
  report.shift = g.size() - g.order() + static_cast<int>(removed.size());
  if (report.shift >= 0) {
    report.left = lhs;
    report.right = rhs.shifted(report.shift);
  } else {
    report.left = lhs.shifted(-report.shift);
    report.right = rhs;
  }
  report.pass = report.left == report.right;
  return report;
}

double spectral_radius(const Graph& g, RootCache* cache) {
  if (g.order() == 0) return 0.0;
  return roots_of(char_poly(signless_laplacian(g)), cache).largest();
}

}  // namespace lappoly
