#ifndef ORDERK_VERIFICATION_HPP
#define ORDERK_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orderk/distribution.hpp"
#include "orderk/moments.hpp"

namespace orderk {

// Reproducible batch of draws from the order-k distribution.
struct SampleBatch {
  std::vector<std::uint64_t> values;
  std::uint64_t seed = 0;
  std::uint64_t count() const { return values.size(); }
};

struct OracleReport {
  std::string quantity;
  double exact_value = 0.0;
  double oracle_value = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;

  std::string to_json_string() const;
};

/// Builds a report from (exact, oracle, tolerance): passed iff the relative
/// error is within tolerance, or the absolute error is when exact = 0.
OracleReport make_report(std::string quantity, double exact_value, double oracle_value,
                         double tolerance);

/// Moment estimate by direct summation of g(x) * P_x over the truncated
/// support (g = x^n, falling factorial, or (x - mu)^n by kind). Throws
/// std::runtime_error when the tail mass cannot be certified below tolerance.
double moment_by_truncated_pmf(MomentKind kind, std::int64_t n, const OrderKParams& params,
                               double tolerance);

// Sampling uses the compound representation X = sum_j j * Y_j with the Y_j
// independent Poisson(lambda), each drawn by sequential-search inversion
// from a per-chunk mt19937_64 stream (chunks of 65536 draws; chunk c is
// seeded with splitmix64(seed, c)). Chunking is part of the output contract,
// so the parallel kernel and the serial reference produce identical batches.
inline constexpr std::uint64_t kSampleChunk = 65536;
inline constexpr const char* kRngAlgorithm = "mt19937_64/splitmix64-chunked/v1";

/// Serial reference sampler.
SampleBatch sample_serial(const OrderKParams& params, std::uint64_t count,
                          std::uint64_t seed);

/// OpenMP sampler; bit-identical to sample_serial for any thread count.
SampleBatch sample(const OrderKParams& params, std::uint64_t count, std::uint64_t seed);

/// Empirical mean of g(x) over the batch. The central kind centers on the
/// exact mean of params, not the sample mean.
double monte_carlo_moment(MomentKind kind, std::int64_t n, const SampleBatch& batch,
                          const OrderKParams& params);

/// Central finite-difference estimate of the n-th MGF derivative at t = 0
/// (order-2 stencils, Richardson-extrapolated for n >= 3) compared against
/// the exact raw moment. Requires 1 <= n <= 4 and 0 < step <= 1e-2.
OracleReport mgf_derivative_check(std::int64_t n, const OrderKParams& params, double step,
                                  double tolerance = 1e-3);

}  // namespace orderk

#endif
