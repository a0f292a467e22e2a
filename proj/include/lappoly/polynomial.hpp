#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace lappoly {

/// Dense univariate polynomial with exact coefficients; coeffs()[k] is the
/// coefficient of x^k. The representation is kept normalised: no trailing
/// zero coefficients, so the zero polynomial has an empty coefficient vector.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }

  static Polynomial monomial(const Coeff& c, int power) {
    std::vector<Coeff> coeffs(static_cast<std::size_t>(power) + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
  }

  /// x - root
  static Polynomial linear(const Coeff& root) {
    return Polynomial(std::vector<Coeff>{Coeff(-root), Coeff(1)});
  }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

  Coeff coeff(int power) const {
    if (power < 0 || power > degree()) return Coeff(0);
    return coeffs_[power];
  }

  const Coeff& leading() const { return coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Coeff& c) {
    for (Coeff& a : coeffs_) a *= c;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(Polynomial p) {
    for (Coeff& a : p.coeffs_) a = -a;
    return p;
  }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Coeff> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (sgn(lhs.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(Polynomial p, const Coeff& c) { return p *= c; }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  /// In-place multiplication by (x - root); the hot step of matching sums.
  void multiply_linear(long root) {
    if (is_zero()) return;
    coeffs_.emplace_back(0);
    for (std::size_t k = coeffs_.size() - 1; k > 0; --k) {
      coeffs_[k] *= -root;
      coeffs_[k] += coeffs_[k - 1];
    }
    coeffs_[0] *= -root;
  }

  /// In-place multiplication by (x - root) for an arbitrary coefficient.
  void multiply_linear(const Coeff& root) {
    if (is_zero()) return;
    coeffs_.emplace_back(0);
    for (std::size_t k = coeffs_.size() - 1; k > 0; --k) {
      coeffs_[k] *= -root;
      coeffs_[k] += coeffs_[k - 1];
    }
    coeffs_[0] *= -root;
  }

  /// p(x) * x^k.
  Polynomial shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Coeff> out(coeffs_.size() + static_cast<std::size_t>(k));
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
    return Polynomial(std::move(out));
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Polynomial(std::move(out));
  }

  /// Horner evaluation; exact for exact coefficient types.
  template <typename Value>
  Value evaluate(const Value& at) const {
    Value acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Value(*it);
    return acc;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form, highest power first: "x^3 - 6*x^2 + 9*x - 2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Coeff& c = coeffs_[k];
      if (sgn(c) == 0) continue;
      Coeff mag = abs(c);
      if (out.empty()) {
        if (sgn(c) < 0) out += "-";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      const bool unit = mag == 1;
      if (!unit || k == 0) out += mag.get_str();
      if (k > 0) {
        if (!unit) out += "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  /// Exact decimal strings ("-3", "7/2"), index = power.
  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const Coeff& c : coeffs_) out.push_back(c.get_str());
    return out;
  }

 private:
  void normalize() {
    if constexpr (std::is_same_v<Coeff, mpq_class>) {
      for (Coeff& c : coeffs_) c.canonicalize();
    }
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPoly = Polynomial<mpz_class>;
using RatPoly = Polynomial<mpq_class>;

IntPoly poly_add(const IntPoly& p, const IntPoly& q);
IntPoly poly_sub(const IntPoly& p, const IntPoly& q);
IntPoly poly_mul(const IntPoly& p, const IntPoly& q);
IntPoly poly_scale(const IntPoly& p, const mpz_class& c);

/// p(x) -> p(x^2).
IntPoly substitute_square(const IntPoly& p);

/// p / x^k; throws NotDivisible unless the k lowest coefficients vanish.
IntPoly divide_by_power(const IntPoly& p, int k);

/// Recovers q with q(x^2) = p; throws OddCoefficientPresent otherwise.
IntPoly even_part_unsquare(const IntPoly& p);

mpq_class evaluate(const IntPoly& p, const mpq_class& at);
mpq_class evaluate(const RatPoly& p, const mpq_class& at);

RatPoly to_rational(const IntPoly& p);

/// The primitive integer polynomial that is a positive rational multiple of p
/// (signs are preserved, so Sturm sign patterns survive the rescaling).
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// Euclidean division over Q; returns (quotient, remainder).
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);

/// Monic gcd over Q (zero if both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);

}  // namespace lappoly
