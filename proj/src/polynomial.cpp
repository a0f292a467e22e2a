#include "lappoly/polynomial.hpp"

#include "lappoly/error.hpp"

namespace lappoly {

IntPoly poly_add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly poly_sub(const IntPoly& p, const IntPoly& q) { return p - q; }
IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }
IntPoly poly_scale(const IntPoly& p, const mpz_class& c) { return p * c; }

IntPoly substitute_square(const IntPoly& p) {
  if (p.is_zero()) return p;
  std::vector<mpz_class> out(2 * p.coeffs().size() - 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[2 * k] = p.coeffs()[k];
  return IntPoly(std::move(out));
}

IntPoly divide_by_power(const IntPoly& p, int k) {
  if (k < 0) throw Error(ErrorCode::BadParameter, "negative power");
  if (p.is_zero() || k == 0) return p;
  for (int i = 0; i < k; ++i) {
    if (sgn(p.coeff(i)) != 0) {
      throw Error(ErrorCode::NotDivisible,
                  p.to_string() + " is not divisible by x^" + std::to_string(k));
    }
  }
  return IntPoly(std::vector<mpz_class>(p.coeffs().begin() + k, p.coeffs().end()));
}

IntPoly even_part_unsquare(const IntPoly& p) {
  std::vector<mpz_class> out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k % 2 == 1) {
      if (sgn(p.coeffs()[k]) != 0) {
        throw Error(ErrorCode::OddCoefficientPresent,
                    p.to_string() + " has a nonzero x^" + std::to_string(k) + " coefficient");
      }
    } else {
      out.push_back(p.coeffs()[k]);
    }
  }
  return IntPoly(std::move(out));
}

mpq_class evaluate(const IntPoly& p, const mpq_class& at) { return p.evaluate(at); }
mpq_class evaluate(const RatPoly& p, const mpq_class& at) { return p.evaluate(at); }

RatPoly to_rational(const IntPoly& p) {
  std::vector<mpq_class> out(p.coeffs().begin(), p.coeffs().end());
  return RatPoly(std::move(out));
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class content = 0;
  for (const mpz_class& c : p.coeffs()) content = gcd(content, c);
  std::vector<mpz_class> out(p.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) mpz_divexact(out[k].get_mpz_t(), p.coeffs()[k].get_mpz_t(), content.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  mpz_class denom = 1;
  for (const mpq_class& c : p.coeffs()) denom = lcm(denom, c.get_den());
  std::vector<mpz_class> out(p.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    mpq_class scaled = p.coeffs()[k] * denom;
    out[k] = scaled.get_num();
  }
  return primitive_part(IntPoly(std::move(out)));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::BadParameter, "division by the zero polynomial");
  std::vector<mpq_class> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {RatPoly(), num};
  std::vector<mpq_class> quot(num.degree() - dd + 1);
  const mpq_class& lead = den.leading();
  for (int k = num.degree(); k >= dd; --k) {
    if (sgn(rem[k]) == 0) continue;
    mpq_class factor = rem[k] / lead;
    quot[k - dd] = factor;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * den.coeffs()[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  mpq_class inv = 1 / a.leading();
  return a * inv;
}

}  // namespace lappoly
