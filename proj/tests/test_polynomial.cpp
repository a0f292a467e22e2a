#include <random>

#include "doctest.h"
#include "lappoly/error.hpp"
#include "lappoly/polynomial.hpp"
#include "lappoly/roots.hpp"

using namespace lappoly;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInvariantViolation;
}

IntPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-50, 50);
  std::vector<mpz_class> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("ring arithmetic") {
  const IntPoly xm1{-1, 1};
  const IntPoly xp1{1, 1};
  CHECK(poly_mul(xm1, xp1) == IntPoly{-1, 0, 1});
  CHECK(poly_add(xm1, IntPoly{}) == xm1);
  CHECK(poly_scale(IntPoly{0, -2, 1}, -2) == IntPoly{0, 4, -2});
  CHECK(poly_sub(xm1, xm1).is_zero());
  CHECK(poly_sub(xm1, xm1).degree() == -1);
  CHECK((IntPoly{1, 2, 3} - IntPoly{0, 0, 3}).degree() == 1);
  IntPoly p{2, 1};
  p.multiply_linear(3);
  CHECK(p == poly_mul(IntPoly{2, 1}, IntPoly{-3, 1}));
  CHECK(IntPoly{-2, 9, -6, 1}.to_string() == "x^3 - 6*x^2 + 9*x - 2");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK(IntPoly{0, -1}.to_string() == "-x");
}

TEST_CASE("substitute_square and even_part_unsquare") {
  CHECK(substitute_square(IntPoly{-2, 1}) == IntPoly{-2, 0, 1});
  CHECK(substitute_square(IntPoly{0, -2, 1}) == IntPoly{0, 0, -2, 0, 1});
  CHECK(substitute_square(IntPoly{1}) == IntPoly{1});
  CHECK(even_part_unsquare(IntPoly{0, 0, -2, 0, 1}) == IntPoly{0, -2, 1});
  CHECK(even_part_unsquare(IntPoly{-2, 0, 1}) == IntPoly{-2, 1});
  CHECK(code_of([] { even_part_unsquare(IntPoly{0, 0, 0, 1}); }) == ErrorCode::OddCoefficientPresent);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    IntPoly p = random_poly(rng, 12);
    REQUIRE(even_part_unsquare(substitute_square(p)) == p);
  }
}

TEST_CASE("divide_by_power") {
  CHECK(divide_by_power(IntPoly{0, 0, -2, 1}, 2) == IntPoly{-2, 1});
  const IntPoly p{3, 1, 4};
  CHECK(divide_by_power(p, 0) == p);
  CHECK(code_of([] { divide_by_power(IntPoly{-1, 0, 1}, 1); }) == ErrorCode::NotDivisible);
  CHECK(code_of([] { divide_by_power(IntPoly{1}, -1); }) == ErrorCode::BadParameter);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    IntPoly q = random_poly(rng, 10);
    const int k = static_cast<int>(rng() % 11);
    REQUIRE(divide_by_power(q.shifted(k), k) == q);
  }
}

TEST_CASE("evaluate") {
  const IntPoly beta_c3{-2, 9, -6, 1};
  CHECK(evaluate(beta_c3, mpq_class(4)) == 2);
  CHECK(evaluate(beta_c3, mpq_class(7, 2)) == mpq_class(-9, 8));
  CHECK(evaluate(beta_c3, mpq_class(0)) == -2);
  CHECK(evaluate(IntPoly{0, -2, 1}, mpq_class(2)) == 0);
  CHECK(evaluate(to_rational(beta_c3), mpq_class(4)) == 2);
}

TEST_CASE("rational helpers") {
  RatPoly half(std::vector<mpq_class>{mpq_class(1, 2), mpq_class(-3, 4)});
  CHECK(primitive_part(half) == IntPoly{2, -3});
  CHECK(primitive_part(IntPoly{-4, -6}) == IntPoly{-2, -3});
  auto [q, r] = divmod(to_rational(IntPoly{-1, 0, 1}), to_rational(IntPoly{-1, 1}));
  CHECK(q == to_rational(IntPoly{1, 1}));
  CHECK(r.is_zero());
  RatPoly g = gcd(to_rational(IntPoly{-1, 0, 1}), to_rational(IntPoly{1, 2, 1}));
  CHECK(g == to_rational(IntPoly{1, 1}));
}

TEST_CASE("real_roots examples") {
  RootList a = real_roots(IntPoly{0, -2, 1});
  REQUIRE(a.roots.size() == 2);
  CHECK(a.roots[0].value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(a.roots[1].value == doctest::Approx(0.0));
  CHECK(a.roots[0].multiplicity == 1);
  CHECK(a.roots[1].multiplicity == 1);

  RootList b = real_roots(IntPoly{1, -2, 1});
  REQUIRE(b.roots.size() == 1);
  CHECK(b.roots[0].multiplicity == 2);
  CHECK(b.roots[0].value == doctest::Approx(1.0));
  CHECK(b.count() == 2);
  CHECK(b.expanded() == std::vector<double>{b.roots[0].value, b.roots[0].value});

  RootList c = real_roots(IntPoly{-2, 9, -6, 1});
  CHECK(c.largest() > 3.5);
  CHECK(c.largest() < 4.0);
  CHECK(c.error_bound <= kIsolationTolerance);

  CHECK(code_of([] { real_roots(IntPoly{1, 0, 1}); }) == ErrorCode::NotRealRooted);
  CHECK(code_of([] { real_roots(IntPoly{}); }) == ErrorCode::BadParameter);
  CHECK(real_roots(IntPoly{5}).empty());
  CHECK(count_distinct_real_roots(IntPoly{-1, 0, 0, 1}) == 1);
}

TEST_CASE("real_roots brackets every root of random real-rooted products") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 7);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    // Product of (b x - a)^k over a few random rationals a/b.
    IntPoly p{1};
    const int factors = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < factors; ++i) {
      const long a = num(rng);
      const long b = den(rng);
      const int k = mult(rng);
      for (int j = 0; j < k; ++j) p = p * IntPoly{-a, b};
    }
    RootList roots = real_roots(p);
    REQUIRE(roots.count() == p.degree());
    REQUIRE(roots.error_bound <= kIsolationTolerance);
    for (std::size_t i = 0; i + 1 < roots.roots.size(); ++i) {
      REQUIRE(roots.roots[i].value >= roots.roots[i + 1].value);
    }
    // Each distinct root sits in its bracket: either an endpoint is an exact
    // root or p (after removing repeated factors) changes sign across it.
    auto sf = square_free_decomposition(p);
    IntPoly radical{1};
    for (const auto& [f, m] : sf) radical = radical * f;
    for (const Root& r : roots.roots) {
      REQUIRE(r.lower <= r.upper);
      const mpq_class lo = evaluate(radical, r.lower);
      const mpq_class hi = evaluate(radical, r.upper);
      REQUIRE((sgn(lo) == 0 || sgn(hi) == 0 || sgn(lo) != sgn(hi)));
      REQUIRE(r.value >= r.lower.get_d() - 1e-15);
      REQUIRE(r.value <= r.upper.get_d() + 1e-15);
    }
  }
}

TEST_CASE("square-free decomposition reconstructs the polynomial up to a constant") {
  IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1} * IntPoly{0, 1} * IntPoly{0, 1} * IntPoly{0, 1};
  auto sf = square_free_decomposition(p);
  IntPoly back{1};
  for (const auto& [f, m] : sf)
    for (int i = 0; i < m; ++i) back = back * f;
  CHECK(back.degree() == p.degree());
  CHECK(primitive_part(back) == primitive_part(p));
}

TEST_CASE("RootCache memoises") {
  RootCache cache;
  const IntPoly p{0, -2, 1};
  const RootList& first = cache.roots(p);
  const RootList& second = cache.roots(p);
  CHECK(&first == &second);
  CHECK(cache.size() == 1);
  CHECK(roots_of(p, nullptr).count() == 2);
}
