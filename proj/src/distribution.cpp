#include "orderk/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orderk/combinatorics.hpp"

namespace orderk {

OrderKParams::OrderKParams(std::int64_t order, ExactRational rate)
    : k(order), lambda(std::move(rate)) {
  if (k < 1) throw std::domain_error("OrderKParams: k must be >= 1");
  if (lambda < 0) throw std::domain_error("OrderKParams: lambda must be non-negative");
}

PmfWeight pmf_poly_sum(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 1) throw std::domain_error("pmf_poly_sum: need n >= 0, k >= 1");
  LambdaPolynomial total;
  for_each_composition(n, k, [&](const Composition& c) {
    std::int64_t power = 0;
    BigInt denom = 1;
    for (std::int64_t m : c.parts) {
      power += m;
      denom *= factorial(m);
    }
    total = total + LambdaPolynomial::monomial(ExactRational(1, denom),
                                               static_cast<std::size_t>(power));
  });
  return {n, total};
}

PmfPolyTable::PmfPolyTable(std::int64_t k) : k_(k) {
  if (k < 1) throw std::domain_error("PmfPolyTable: k must be >= 1");
  q_.push_back(LambdaPolynomial::constant(1));
}

void PmfPolyTable::ensure(std::int64_t n) {
  while (static_cast<std::int64_t>(q_.size()) <= n) {
    const std::int64_t m = static_cast<std::int64_t>(q_.size());
    LambdaPolynomial acc;
    for (std::int64_t j = 1; j <= std::min(m, k_); ++j)
      acc = acc + q_[static_cast<std::size_t>(m - j)] * ExactRational(j);
    q_.push_back(acc.shifted(1) * ExactRational(1, m));
  }
}

const LambdaPolynomial& PmfPolyTable::q(std::int64_t n) {
  ensure(n);
  return q_[static_cast<std::size_t>(n)];
}

PmfWeight pmf_poly_recurrence(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::domain_error("pmf_poly_recurrence: n must be >= 0");
  PmfPolyTable table(k);
  return {n, table.q(n)};
}

namespace {

// Q_0(lambda)..Q_n(lambda) by the weight recurrence at fixed lambda.
std::vector<double> weight_values(std::int64_t n, std::int64_t k, double lambda) {
  std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
  w[0] = 1.0;
  for (std::int64_t m = 1; m <= n; ++m) {
    double acc = 0.0;
    for (std::int64_t j = 1; j <= std::min(m, k); ++j)
      acc += static_cast<double>(j) * w[static_cast<std::size_t>(m - j)];
    w[static_cast<std::size_t>(m)] = lambda / static_cast<double>(m) * acc;
  }
  return w;
}

double log_rational(const ExactRational& r) {
  return log_bigint(numerator(r)) - log_bigint(denominator(r));
}

// log(Q_0(lambda))..log(Q_n(lambda)) by the same recurrence with max-term
// scaling, immune to under/overflow of the weights themselves.
std::vector<double> log_weight_values(std::int64_t n, std::int64_t k,
                                      const ExactRational& lambda) {
  const double log_lambda = log_rational(lambda);
  std::vector<double> lw(static_cast<std::size_t>(n) + 1, -HUGE_VAL);
  lw[0] = 0.0;
  for (std::int64_t m = 1; m <= n; ++m) {
    double peak = -HUGE_VAL;
    for (std::int64_t j = 1; j <= std::min(m, k); ++j)
      peak = std::max(peak, lw[static_cast<std::size_t>(m - j)]);
    if (peak == -HUGE_VAL) continue;
    double s = 0.0;
    for (std::int64_t j = 1; j <= std::min(m, k); ++j)
      s += static_cast<double>(j) *
           std::exp(lw[static_cast<std::size_t>(m - j)] - peak);
    lw[static_cast<std::size_t>(m)] =
        log_lambda - std::log(static_cast<double>(m)) + peak + std::log(s);
  }
  return lw;
}

constexpr double kLogSpaceThreshold = 600.0;  // e^{-x} underflows near 745

}  // namespace

double pmf(std::int64_t n, const OrderKParams& params) {
  if (n < 0) throw std::domain_error("pmf: n must be >= 0");
  if (params.lambda == 0) return n == 0 ? 1.0 : 0.0;
  const double lam = params.lambda_double();
  const double klam = static_cast<double>(params.k) * lam;
  if (klam <= kLogSpaceThreshold) {
    auto w = weight_values(n, params.k, lam);
    return std::exp(-klam) * w.back();
  }
  auto lw = log_weight_values(n, params.k, params.lambda);
  return std::exp(lw.back() - klam);
}

double cdf(std::int64_t n, const OrderKParams& params) {
  if (n < 0) throw std::domain_error("cdf: n must be >= 0");
  if (params.lambda == 0) return 1.0;
  const double lam = params.lambda_double();
  const double klam = static_cast<double>(params.k) * lam;
  if (klam <= kLogSpaceThreshold) {
    auto w = weight_values(n, params.k, lam);
    double total = 0.0;
    for (double v : w) total += v;
    return std::min(1.0, std::exp(-klam) * total);
  }
  auto lw = log_weight_values(n, params.k, params.lambda);
  double total = 0.0;
  for (double v : lw) total += std::exp(v - klam);
  return std::min(1.0, total);
}

ExactRational mean(const OrderKParams& params) {
  return ExactRational(power_sum(1, params.k)) * params.lambda;
}

ExactRational variance(const OrderKParams& params) {
  return ExactRational(power_sum(2, params.k)) * params.lambda;
}

double mgf(double t, const OrderKParams& params) {
  if (!std::isfinite(t)) throw std::domain_error("mgf: t must be finite");
  const double lam = params.lambda_double();
  double s = 0.0;
  for (std::int64_t j = 1; j <= params.k; ++j) {
    double e = static_cast<double>(j) * t;
    if (e > 700.0) throw std::overflow_error("mgf: e^{kt} exceeds double range");
    s += std::exp(e);
  }
  double exponent = lam * s - static_cast<double>(params.k) * lam;
  if (exponent > 700.0) throw std::overflow_error("mgf: result exceeds double range");
  return std::exp(exponent);
}

std::int64_t truncation_bound(const OrderKParams& params, std::int64_t highest_moment) {
  const double mu = rational_to_double(mean(params));
  const double sigma = std::sqrt(rational_to_double(variance(params)));
  const double bound =
      mu + 12.0 * sigma +
      8.0 * static_cast<double>(highest_moment) * static_cast<double>(params.k) + 20.0;
  return static_cast<std::int64_t>(std::ceil(bound));
}

}  // namespace orderk
