#include "lappoly/roots.hpp"

#include <algorithm>
#include <cmath>

#include "lappoly/error.hpp"

namespace lappoly {

namespace {

// A point num / 2^exp on the dyadic grid used by bisection.
struct Dyadic {
  mpz_class num;
  unsigned long exp = 0;

  mpq_class to_rational() const {
    mpq_class q(num);
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), exp);
    return q;
  }
};

// Sign of p(num / 2^exp), computed as the sign of the integer
// 2^(exp*deg) * p(num / 2^exp) with a homogenised Horner scheme.
int sign_at(const IntPoly& p, const Dyadic& at) {
  const auto& c = p.coeffs();
  if (c.empty()) return 0;
  mpz_class acc = c.back();
  mpz_class term;
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc *= at.num;
    mpz_mul_2exp(term.get_mpz_t(), c[k].get_mpz_t(), at.exp * static_cast<unsigned long>(p.degree() - k));
    acc += term;
  }
  return sgn(acc);
}

class SturmChain {
 public:
  explicit SturmChain(const IntPoly& squarefree) {
    chain_.push_back(squarefree);
    IntPoly d = squarefree.derivative();
    if (d.is_zero()) return;
    chain_.push_back(primitive_part(d));
    RatPoly prev = to_rational(chain_[0]);
    RatPoly cur = to_rational(chain_[1]);
    while (cur.degree() > 0) {
      RatPoly rem = -divmod(prev, cur).second;
      if (rem.is_zero()) break;
      chain_.push_back(primitive_part(rem));
      prev = std::move(cur);
      cur = to_rational(chain_.back());
    }
  }

  int variations(const Dyadic& at) const {
    int count = 0;
    int last = 0;
    for (const IntPoly& s : chain_) {
      const int sg = sign_at(s, at);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  }

  int variations_at_infinity(bool positive) const {
    int count = 0;
    int last = 0;
    for (const IntPoly& s : chain_) {
      int sg = sgn(s.leading());
      if (!positive && s.degree() % 2 == 1) sg = -sg;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  }

  const IntPoly& poly() const { return chain_.front(); }

 private:
  std::vector<IntPoly> chain_;
};

// Smallest e with every root strictly inside (-2^e, 2^e) (Cauchy bound).
unsigned long root_radius_exponent(const IntPoly& p) {
  mpq_class bound = 0;
  const mpz_class lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    mpq_class ratio(abs(p.coeffs()[k]), lead);
    ratio.canonicalize();
    if (ratio > bound) bound = ratio;
  }
  bound += 1;
  unsigned long e = 0;
  mpz_class radius = 1;
  while (mpq_class(radius) <= bound) {
    radius *= 2;
    ++e;
  }
  return e;
}

struct Interval {
  Dyadic lo;
  Dyadic hi;
};

Interval at_common_exponent(Dyadic a, Dyadic b) {
  if (a.exp < b.exp) {
    mpz_mul_2exp(a.num.get_mpz_t(), a.num.get_mpz_t(), b.exp - a.exp);
    a.exp = b.exp;
  } else if (b.exp < a.exp) {
    mpz_mul_2exp(b.num.get_mpz_t(), b.num.get_mpz_t(), a.exp - b.exp);
    b.exp = a.exp;
  }
  return {std::move(a), std::move(b)};
}

Dyadic midpoint(const Interval& iv) {
  Dyadic mid;
  mid.num = iv.lo.num + iv.hi.num;
  mid.exp = iv.lo.exp + 1;
  return mid;
}

double width(const Interval& iv) {
  mpq_class w = iv.hi.to_rational() - iv.lo.to_rational();
  return w.get_d();
}

Root make_root(const Interval& iv, int multiplicity) {
  Root r;
  r.multiplicity = multiplicity;
  r.lower = iv.lo.to_rational();
  r.upper = iv.hi.to_rational();
  mpq_class mid = (r.lower + r.upper) / 2;
  r.value = mid.get_d();
  return r;
}

// Shrinks an interval (lo, hi] holding exactly one simple root, with p(hi) != 0,
// until its width is at most tol.
Interval refine(const IntPoly& p, Interval iv, double tol) {
  const int sign_hi = sign_at(p, iv.hi);
  while (width(iv) > tol) {
    Dyadic mid = midpoint(iv);
    const int sg = sign_at(p, mid);
    if (sg == 0) return {mid, mid};
    Interval half = sg == sign_hi ? at_common_exponent(iv.lo, mid) : at_common_exponent(mid, iv.hi);
    iv = std::move(half);
  }
  return iv;
}

// Collects isolating intervals for the roots of a square-free p in (lo, hi].
void isolate(const SturmChain& chain, Interval iv, int var_lo, int var_hi, double tol,
             int multiplicity, std::vector<Root>& out) {
  const int count = var_lo - var_hi;
  if (count <= 0) return;
  const IntPoly& p = chain.poly();
  if (count == 1) {
    if (sign_at(p, iv.hi) == 0) {
      out.push_back(make_root({iv.hi, iv.hi}, multiplicity));
      return;
    }
    out.push_back(make_root(refine(p, std::move(iv), tol), multiplicity));
    return;
  }
  Dyadic mid = midpoint(iv);
  const int var_mid = chain.variations(mid);
  Interval left = at_common_exponent(iv.lo, mid);
  Interval right = at_common_exponent(mid, iv.hi);
  isolate(chain, std::move(left), var_lo, var_mid, tol, multiplicity, out);
  isolate(chain, std::move(right), var_mid, var_hi, tol, multiplicity, out);
}

}  // namespace

int RootList::count() const {
  int total = 0;
  for (const Root& r : roots) total += r.multiplicity;
  return total;
}

std::vector<double> RootList::expanded() const {
  std::vector<double> out;
  for (const Root& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() < 1) return out;
  const RatPoly f = to_rational(p);
  const RatPoly df = f.derivative();
  RatPoly a = gcd(f, df);
  RatPoly b = divmod(f, a).first;
  RatPoly c = divmod(df, a).first;
  RatPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RatPoly factor = gcd(b, d);
    if (factor.degree() > 0) out.emplace_back(primitive_part(factor), i);
    b = divmod(b, factor).first;
    c = divmod(d, factor).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

int count_distinct_real_roots(const IntPoly& p) {
  int total = 0;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    SturmChain chain(factor);
    total += chain.variations_at_infinity(false) - chain.variations_at_infinity(true);
  }
  return total;
}

RootList real_roots(const IntPoly& p, double tol) {
  if (p.is_zero()) throw Error(ErrorCode::BadParameter, "real_roots of the zero polynomial");
  if (!(tol > 0.0)) throw Error(ErrorCode::BadParameter, "root tolerance must be positive");
  RootList list;
  int found = 0;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    SturmChain chain(factor);
    const int var_neg = chain.variations_at_infinity(false);
    const int var_pos = chain.variations_at_infinity(true);
    found += mult * (var_neg - var_pos);
    if (var_neg - var_pos != factor.degree()) continue;

    const unsigned long e = root_radius_exponent(factor);
    Interval all;
    mpz_ui_pow_ui(all.hi.num.get_mpz_t(), 2, e);
    all.lo.num = -all.hi.num;
    const int var_lo = chain.variations(all.lo);
    const int var_hi = chain.variations(all.hi);
    isolate(chain, std::move(all), var_lo, var_hi, tol, mult, list.roots);
  }
  if (found != p.degree()) {
    throw Error(ErrorCode::NotRealRooted,
                p.to_string() + " has " + std::to_string(found) + " real roots but degree " +
                    std::to_string(p.degree()));
  }
  std::sort(list.roots.begin(), list.roots.end(),
            [](const Root& a, const Root& b) { return a.value > b.value; });
  for (const Root& r : list.roots) {
    mpq_class half = (r.upper - r.lower) / 2;
    list.error_bound = std::max(list.error_bound, half.get_d());
  }
  return list;
}

std::size_t RootCache::Hash::operator()(const IntPoly& p) const noexcept {
  std::size_t h = p.coeffs().size();
  for (const mpz_class& c : p.coeffs()) {
    h ^= static_cast<std::size_t>(mpz_get_si(c.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

const RootList& RootCache::roots(const IntPoly& p) {
  auto it = entries_.find(p);
  if (it != entries_.end()) return it->second;
  return entries_.emplace(p, real_roots(p, tol_)).first->second;
}

RootList roots_of(const IntPoly& p, RootCache* cache) {
  return cache ? cache->roots(p) : real_roots(p);
}

}  // namespace lappoly
