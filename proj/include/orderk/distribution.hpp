#ifndef ORDERK_DISTRIBUTION_HPP
#define ORDERK_DISTRIBUTION_HPP

#include <cstdint>
#include <vector>

#include "orderk/polynomial.hpp"

namespace orderk {

// Parameters (k, lambda) of the Poisson distribution of order k.
// lambda = 0 is accepted and denotes the point mass at 0.
struct OrderKParams {
  std::int64_t k;
  ExactRational lambda;

  OrderKParams(std::int64_t order, ExactRational rate);
  double lambda_double() const { return rational_to_double(lambda); }
};

// P_n with the transcendental factor split off: P_n = e^{-k*lambda} * q(lambda).
// q has non-negative coefficients, degree <= n, q(0) = 0 for n >= 1, q = 1 for n = 0.
struct PmfWeight {
  std::int64_t n;
  LambdaPolynomial q;
};

/// Q_n by summing lambda^{sum n_j} / prod n_j! over all compositions of n
/// into parts of size at most k.
PmfWeight pmf_poly_sum(std::int64_t n, std::int64_t k);

/// Q_n by the recurrence Q_n = (1/n) * sum_{j=1}^{min(n,k)} j * lambda * Q_{n-j},
/// seeded with Q_0 = 1. Agrees with pmf_poly_sum exactly.
PmfWeight pmf_poly_recurrence(std::int64_t n, std::int64_t k);

// Memoized Q_0..Q_n table for one k. Grow with ensure() before sharing
// across threads; reads are then const.
class PmfPolyTable {
 public:
  explicit PmfPolyTable(std::int64_t k);
  void ensure(std::int64_t n);
  const LambdaPolynomial& q(std::int64_t n);
  std::int64_t order() const { return k_; }

 private:
  std::int64_t k_;
  std::vector<LambdaPolynomial> q_;
};

/// P_n evaluated in floating point via the recurrence on weights at fixed
/// lambda; switches to log-space accumulation when k*lambda is large enough
/// that e^{-k*lambda} would underflow prematurely.
double pmf(std::int64_t n, const OrderKParams& params);

/// Cumulative sum of pmf over 0..n.
double cdf(std::int64_t n, const OrderKParams& params);

/// k(k+1)/2 * lambda, exactly.
ExactRational mean(const OrderKParams& params);

/// k(k+1)(2k+1)/6 * lambda, exactly.
ExactRational variance(const OrderKParams& params);

/// Moment generating function e^{-k*lambda} * e^{lambda*(e^t + ... + e^{kt})}.
/// Throws std::overflow_error when the result exceeds double range.
double mgf(double t, const OrderKParams& params);

/// Truncation bound for tail sums: ceil(mu + 12*sigma + 8*n_max*k + 20),
/// where n_max is the highest moment the caller will request.
std::int64_t truncation_bound(const OrderKParams& params, std::int64_t highest_moment);

}  // namespace orderk

#endif
