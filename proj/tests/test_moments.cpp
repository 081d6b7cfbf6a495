#include <doctest.h>

#include <cmath>

#include "orderk/combinatorics.hpp"
#include "orderk/distribution.hpp"
#include "orderk/moments.hpp"
#include "orderk/verification.hpp"

using namespace orderk;

namespace {

LambdaPolynomial make(std::initializer_list<int> coeffs) {
  std::vector<ExactRational> v;
  for (int c : coeffs) v.emplace_back(c);
  return LambdaPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("raw moment recurrence examples") {
  CHECK(raw_moment_recurrence(1, 2).poly == make({0, 3}));
  CHECK(raw_moment_recurrence(2, 2).poly == make({0, 5, 9}));
  CHECK(raw_moment_recurrence(4, 1).poly == make({0, 1, 7, 6, 1}));
  CHECK(raw_moment_recurrence(0, 5).poly == make({1}));
}

TEST_CASE("raw moment sum examples") {
  CHECK(raw_moment_sum(3, 1).poly == make({0, 1, 3, 1}));
  CHECK(raw_moment_sum(2, 3).poly == make({0, 14, 36}));
  CHECK(raw_moment_sum(0, 4).poly == make({1}));
}

TEST_CASE("factorial moment examples") {
  CHECK(factorial_moment_recurrence(2, 2).poly == make({0, 2, 9}));
  CHECK(factorial_moment_recurrence(3, 1).poly == make({0, 0, 0, 1}));
  CHECK(factorial_moment_recurrence(1, 4).poly == make({0, 10}));
  CHECK(factorial_moment_sum(2, 2).poly == make({0, 2, 9}));
  CHECK(factorial_moment_sum(4, 1).poly == make({0, 0, 0, 0, 1}));
  CHECK(factorial_moment_sum(3, 2).poly == factorial_moment_recurrence(3, 2).poly);
}

TEST_CASE("central moment examples") {
  CHECK(central_moment_recurrence(2, 2).poly == make({0, 5}));
  CHECK(central_moment_recurrence(4, 1).poly == make({0, 1, 3}));
  CHECK(central_moment_recurrence(1, 4).poly.is_zero());
  CHECK(central_moment_sum(6, 1).poly == make({0, 1, 25, 15}));
  CHECK(central_moment_sum(4, 2).poly == make({0, 17, 75}));
  CHECK(central_moment_sum(3, 1).poly == make({0, 1}));
  CHECK(central_moment_recurrence(3, 1).poly == make({0, 1}));
}

TEST_CASE("conversion examples") {
  CHECK(raw_from_factorial(4, 1).poly == make({0, 1, 7, 6, 1}));
  CHECK(raw_from_factorial(1, 3).poly == factorial_moment_recurrence(1, 3).poly);
  CHECK(raw_from_factorial(2, 2).poly == make({0, 5, 9}));
  CHECK(central_from_raw(2, 1).poly == make({0, 1}));
  CHECK(central_from_raw(2, 2).poly == make({0, 5}));
  CHECK(central_from_raw(0, 4).poly == make({1}));
}

TEST_CASE("touchard polynomials") {
  CHECK(touchard_raw_moment(0) == make({1}));
  CHECK(touchard_raw_moment(5) == make({0, 1, 15, 25, 10, 1}));
  CHECK(touchard_raw_moment(6) == make({0, 1, 31, 90, 65, 15, 1}));
  for (std::int64_t n = 0; n <= 10; ++n)
    CHECK(touchard_raw_moment(n) == raw_moment_sum(n, 1).poly);
}

TEST_CASE("method agreement across all families") {
  for (std::int64_t k = 1; k <= 6; ++k) {
    MomentEngine engine(k);
    for (std::int64_t n = 0; n <= 12; ++n) {
      CHECK(engine.raw_recurrence(n).poly == engine.raw_sum(n).poly);
      CHECK(engine.factorial_recurrence(n).poly == engine.factorial_sum(n).poly);
      CHECK(engine.central_recurrence(n).poly == engine.central_sum(n).poly);
    }
  }
}

TEST_CASE("cross-family agreement") {
  for (std::int64_t k = 1; k <= 6; ++k) {
    MomentEngine engine(k);
    for (std::int64_t n = 0; n <= 12; ++n) {
      CHECK(engine.raw_from_factorial(n).poly == engine.raw_sum(n).poly);
      CHECK(engine.central_from_raw(n).poly == engine.central_recurrence(n).poly);
    }
  }
}

TEST_CASE("central sum is the raw sum filtered to n_1 = 0") {
  for (std::int64_t k = 1; k <= 5; ++k)
    for (std::int64_t n = 2; n <= 10; ++n) {
      // independent filtered enumeration of the raw-moment terms
      LambdaPolynomial filtered;
      for_each_composition(n, n, [&](const Composition& c) {
        if (c.parts[0] > 0) return;
        ExactRational term = 1;
        std::int64_t power = 0;
        for (std::int64_t j = 1; j <= n; ++j) {
          std::int64_t m = c.parts[static_cast<std::size_t>(j - 1)];
          power += m;
          ExactRational w(power_sum(j, k), factorial(j));
          for (std::int64_t i = 0; i < m; ++i) term *= w;
          term /= ExactRational(factorial(m));
        }
        filtered = filtered +
                   LambdaPolynomial::monomial(term, static_cast<std::size_t>(power));
      });
      filtered = filtered * ExactRational(factorial(n));
      CHECK(filtered == central_moment_sum(n, k).poly);
    }
}

TEST_CASE("central moment structure") {
  for (std::int64_t k = 2; k <= 6; ++k)
    for (std::int64_t n = 2; n <= 12; ++n) {
      auto poly = central_moment_recurrence(n, k).poly;
      CHECK(poly.degree() == n / 2);
      CHECK(poly.coefficient(0) == 0);
      CHECK(poly.coefficient(1) == ExactRational(power_sum(n, k)));
      for (std::int64_t i = 1; i <= n / 2; ++i)
        CHECK(poly.coefficient(static_cast<std::size_t>(i)) != 0);
    }
}

TEST_CASE("no constant term and leading coefficients") {
  for (std::int64_t k = 1; k <= 6; ++k)
    for (std::int64_t n = 1; n <= 10; ++n) {
      auto raw = raw_moment_recurrence(n, k).poly;
      auto fact = factorial_moment_recurrence(n, k).poly;
      CHECK(raw.coefficient(0) == 0);
      CHECK(fact.coefficient(0) == 0);
      CHECK(raw.degree() == n);
      CHECK(fact.degree() == n);
      const ExactRational half_ksq(BigInt(k) * (k + 1), 2);
      ExactRational lead = 1;
      for (std::int64_t i = 0; i < n; ++i) lead *= half_ksq;
      CHECK(raw.coefficient(static_cast<std::size_t>(n)) == lead);
      CHECK(fact.coefficient(static_cast<std::size_t>(n)) == lead);
    }
}

TEST_CASE("k = 1 reduction of all families") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    auto fact = factorial_moment_recurrence(n, 1).poly;
    CHECK(fact == LambdaPolynomial::monomial(1, static_cast<std::size_t>(n)));
    CHECK(raw_moment_recurrence(n, 1).poly == touchard_raw_moment(n));
  }
  // the standard-Poisson central moment table, orders 2..7
  CHECK(central_moment_recurrence(2, 1).poly == make({0, 1}));
  CHECK(central_moment_recurrence(3, 1).poly == make({0, 1}));
  CHECK(central_moment_recurrence(4, 1).poly == make({0, 1, 3}));
  CHECK(central_moment_recurrence(5, 1).poly == make({0, 1, 10}));
  CHECK(central_moment_recurrence(6, 1).poly == make({0, 1, 25, 15}));
  CHECK(central_moment_recurrence(7, 1).poly == make({0, 1, 56, 105}));
}

TEST_CASE("moments agree with the truncated-pmf oracle") {
  for (std::int64_t k = 1; k <= 3; ++k) {
    MomentEngine engine(k);
    OrderKParams params(k, 1);
    for (auto kind : {MomentKind::Raw, MomentKind::Factorial, MomentKind::Central}) {
      for (std::int64_t n = 0; n <= 6; ++n) {
        double exact = engine.compute(kind, MomentMethod::Recurrence, n)
                           .poly.eval_double(1.0);
        double oracle = moment_by_truncated_pmf(kind, n, params, 1e-8);
        if (exact == 0.0)
          CHECK(std::fabs(oracle) < 1e-8);
        else
          CHECK(oracle == doctest::Approx(exact).epsilon(1e-8));
      }
    }
  }
}
