#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "orderk/verification.hpp"

using namespace orderk;

TEST_CASE("truncated-pmf oracle hits the closed forms") {
  CHECK(moment_by_truncated_pmf(MomentKind::Raw, 1, {3, 1}, 1e-8) ==
        doctest::Approx(6.0).epsilon(1e-8));
  CHECK(moment_by_truncated_pmf(MomentKind::Central, 2, {2, 1}, 1e-8) ==
        doctest::Approx(5.0).epsilon(1e-8));
  CHECK(moment_by_truncated_pmf(MomentKind::Factorial, 2, {1, 2}, 1e-8) ==
        doctest::Approx(4.0).epsilon(1e-8));
  CHECK_THROWS_AS(moment_by_truncated_pmf(MomentKind::Raw, 1, {1, 1}, 0.0),
                  std::domain_error);
}

TEST_CASE("sampler determinism") {
  OrderKParams params(2, ExactRational(3, 4));
  auto a = sample(params, 5, 99);
  auto b = sample(params, 5, 99);
  CHECK(a.values == b.values);
  auto c = sample(params, 5, 100);
  CHECK(a.values != c.values);
}

TEST_CASE("parallel sampler matches the serial reference") {
  OrderKParams params(3, 1);
  // crosses several chunk boundaries
  const std::uint64_t count = 3 * kSampleChunk + 1234;
  auto serial = sample_serial(params, count, 7);
  auto parallel = sample(params, count, 7);
  CHECK(serial.values == parallel.values);
}

TEST_CASE("monte carlo moments") {
  OrderKParams params(3, 1);
  auto batch = sample(params, 1000000, 42);
  CHECK(monte_carlo_moment(MomentKind::Raw, 0, batch, params) == 1.0);

  const double mu = rational_to_double(mean(params));        // 6
  const double var = rational_to_double(variance(params));   // 14
  const double se = std::sqrt(var / 1e6);
  CHECK(std::fabs(monte_carlo_moment(MomentKind::Raw, 1, batch, params) - mu) <= 5 * se);

  const double m4 = rational_to_double(central_moment_recurrence(4, 3).poly(1));
  const double se_var = std::sqrt((m4 - var * var) / 1e6);
  CHECK(std::fabs(monte_carlo_moment(MomentKind::Central, 2, batch, params) - var) <=
        5 * se_var);
}

TEST_CASE("sampler frequencies match the pmf") {
  const double count = 1e6;
  for (std::int64_t k = 1; k <= 3; ++k) {
    OrderKParams params(k, 1);
    auto batch = sample(params, static_cast<std::uint64_t>(count), 2024);
    std::vector<double> freq(11, 0.0);
    for (auto v : batch.values)
      if (v <= 10) freq[static_cast<std::size_t>(v)] += 1.0;
    for (std::int64_t n = 0; n <= 10; ++n) {
      const double p = pmf(n, params);
      const double tol = 6.0 * std::sqrt(p * (1.0 - p) / count);
      CHECK(std::fabs(freq[static_cast<std::size_t>(n)] / count - p) <= tol);
    }
  }
}

TEST_CASE("mgf derivative checks") {
  auto r1 = mgf_derivative_check(1, {2, 1}, 1e-4);
  CHECK(r1.exact_value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r1.rel_error <= 1e-6);
  CHECK(r1.passed);

  auto r2 = mgf_derivative_check(2, {1, 1}, 1e-3);
  CHECK(r2.exact_value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r2.passed);

  auto r4 = mgf_derivative_check(4, {1, 1}, 1e-2);
  CHECK(r4.exact_value == doctest::Approx(15.0).epsilon(1e-12));
  CHECK(r4.rel_error <= 1e-3);

  CHECK_THROWS_AS(mgf_derivative_check(5, OrderKParams(1, 1), 1e-3), std::domain_error);
  CHECK_THROWS_AS(mgf_derivative_check(1, OrderKParams(1, 1), 0.5), std::domain_error);
}

TEST_CASE("oracle closure: truncated pmf vs monte carlo") {
  for (std::int64_t k = 1; k <= 3; ++k) {
    OrderKParams params(k, 1);
    auto batch = sample(params, 1000000, 31337);
    for (auto kind : {MomentKind::Raw, MomentKind::Factorial, MomentKind::Central}) {
      for (std::int64_t n = 1; n <= 4; ++n) {
        const double tp = moment_by_truncated_pmf(kind, n, params, 1e-8);
        const double mc = monte_carlo_moment(kind, n, batch, params);
        // MC tolerance from the empirical second moment of g
        double g2 = 0.0;
        const double mu = rational_to_double(mean(params));
        for (auto v : batch.values) {
          double x = static_cast<double>(v);
          double g = kind == MomentKind::Raw ? std::pow(x, double(n))
                     : kind == MomentKind::Central
                         ? std::pow(x - mu, double(n))
                         : [&] {
                             double p = 1.0;
                             for (std::int64_t i = 0; i < n; ++i) p *= x - double(i);
                             return p;
                           }();
          g2 += g * g;
        }
        g2 /= 1e6;
        const double se = std::sqrt(std::max(0.0, g2 - mc * mc) / 1e6);
        CHECK(std::fabs(tp - mc) <= 5.0 * se + 1e-8 * std::fabs(tp));
      }
    }
  }
}

TEST_CASE("oracle report serialization") {
  auto rep = make_report("demo", 2.0, 2.0000001, 1e-6);
  auto j = nlohmann::json::parse(rep.to_json_string());
  CHECK(j["quantity"] == "demo");
  CHECK(j["passed"] == true);
  CHECK(j["tolerance"] == 1e-6);
  CHECK(j["rel_error"].get<double>() == doctest::Approx(5e-8).epsilon(1e-3));

  auto zero = make_report("zero-case", 0.0, 1e-9, 1e-8);
  CHECK(zero.passed);
  auto zero_fail = make_report("zero-case", 0.0, 1e-7, 1e-8);
  CHECK_FALSE(zero_fail.passed);
}
