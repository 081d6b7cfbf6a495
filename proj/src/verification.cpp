#include "orderk/verification.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orderk {

std::string OracleReport::to_json_string() const {
  nlohmann::json j{{"quantity", quantity},     {"exact_value", exact_value},
                   {"oracle_value", oracle_value}, {"abs_error", abs_error},
                   {"rel_error", rel_error},   {"tolerance", tolerance},
                   {"passed", passed}};
  return j.dump();
}

OracleReport make_report(std::string quantity, double exact_value, double oracle_value,
                         double tolerance) {
  OracleReport r;
  r.quantity = std::move(quantity);
  r.exact_value = exact_value;
  r.oracle_value = oracle_value;
  r.abs_error = std::fabs(oracle_value - exact_value);
  r.rel_error = exact_value == 0.0 ? r.abs_error : r.abs_error / std::fabs(exact_value);
  r.tolerance = tolerance;
  r.passed = exact_value == 0.0 ? r.abs_error <= tolerance : r.rel_error <= tolerance;
  return r;
}

namespace {

double falling_factorial_double(double x, std::int64_t n) {
  double p = 1.0;
  for (std::int64_t i = 0; i < n; ++i) p *= x - static_cast<double>(i);
  return p;
}

double moment_g(MomentKind kind, std::int64_t n, double x, double mu) {
  switch (kind) {
    case MomentKind::Raw: return std::pow(x, static_cast<double>(n));
    case MomentKind::Factorial: return falling_factorial_double(x, n);
    case MomentKind::Central: return std::pow(x - mu, static_cast<double>(n));
  }
  return 0.0;
}

}  // namespace

double moment_by_truncated_pmf(MomentKind kind, std::int64_t n, const OrderKParams& params,
                               double tolerance) {
  if (n < 0) throw std::domain_error("moment order must be >= 0");
  if (tolerance <= 0) throw std::domain_error("tolerance must be positive");
  if (params.lambda == 0) return kind == MomentKind::Central && n >= 1 ? 0.0 : (n == 0 ? 1.0 : 0.0);

  const std::int64_t cutoff = truncation_bound(params, n);
  const double mu = rational_to_double(mean(params));
  double sum = 0.0;
  double mass = 0.0;
  double last_terms = 0.0;
  for (std::int64_t x = 0; x <= cutoff; ++x) {
    const double p = pmf(x, params);
    mass += p;
    const double term = moment_g(kind, n, static_cast<double>(x), mu) * p;
    sum += term;
    if (x > cutoff - 5) last_terms += std::fabs(term);
  }
  // tail certificate: leftover probability mass and the trailing integrand
  // must both be negligible against the requested tolerance
  const double scale = std::max(1.0, std::fabs(sum));
  if (1.0 - mass > tolerance * 1e-2 || last_terms > tolerance * scale * 1e-2)
    throw std::runtime_error("moment_by_truncated_pmf: tail not certified below tolerance");
  return sum;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(seed + 0x632BE59BD9B4E019ULL * (chunk + 1));
}

double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Sequential-search inversion; exact and fast at desk-scale lambda.
std::uint64_t poisson_draw(std::mt19937_64& eng, double lambda) {
  const double u = uniform01(eng);
  double p = std::exp(-lambda);
  double cum = p;
  std::uint64_t x = 0;
  while (u > cum && x < 100000) {
    ++x;
    p *= lambda / static_cast<double>(x);
    cum += p;
  }
  return x;
}

void fill_chunk(std::uint64_t* out, std::uint64_t len, std::uint64_t cseed,
                std::int64_t k, double lambda) {
  std::mt19937_64 eng(cseed);
  for (std::uint64_t i = 0; i < len; ++i) {
    std::uint64_t x = 0;
    for (std::int64_t j = 1; j <= k; ++j)
      x += static_cast<std::uint64_t>(j) * poisson_draw(eng, lambda);
    out[i] = x;
  }
}

}  // namespace

SampleBatch sample_serial(const OrderKParams& params, std::uint64_t count,
                          std::uint64_t seed) {
  if (count < 1) throw std::domain_error("sample: count must be >= 1");
  SampleBatch batch;
  batch.seed = seed;
  batch.values.resize(count);
  const double lambda = params.lambda_double();
  const std::uint64_t chunks = (count + kSampleChunk - 1) / kSampleChunk;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = c * kSampleChunk;
    const std::uint64_t len = std::min(kSampleChunk, count - begin);
    fill_chunk(batch.values.data() + begin, len, chunk_seed(seed, c), params.k, lambda);
  }
  return batch;
}

SampleBatch sample(const OrderKParams& params, std::uint64_t count, std::uint64_t seed) {
  if (count < 1) throw std::domain_error("sample: count must be >= 1");
  SampleBatch batch;
  batch.seed = seed;
  batch.values.resize(count);
  const double lambda = params.lambda_double();
  const std::int64_t chunks =
      static_cast<std::int64_t>((count + kSampleChunk - 1) / kSampleChunk);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kSampleChunk;
    const std::uint64_t len = std::min(kSampleChunk, count - begin);
    fill_chunk(batch.values.data() + begin, len,
               chunk_seed(seed, static_cast<std::uint64_t>(c)), params.k, lambda);
  }
  return batch;
}

double monte_carlo_moment(MomentKind kind, std::int64_t n, const SampleBatch& batch,
                          const OrderKParams& params) {
  if (batch.values.empty()) throw std::domain_error("monte_carlo_moment: empty batch");
  const double mu = rational_to_double(mean(params));
  double total = 0.0;
  const std::int64_t size = static_cast<std::int64_t>(batch.values.size());
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : total)
#endif
  for (std::int64_t i = 0; i < size; ++i)
    total += moment_g(kind, n, static_cast<double>(batch.values[static_cast<std::size_t>(i)]), mu);
  return total / static_cast<double>(batch.values.size());
}

namespace {

double nth_difference(std::int64_t n, const OrderKParams& params, double h) {
  auto f = [&](double t) { return mgf(t, params); };
  switch (n) {
    case 1: return (f(h) - f(-h)) / (2.0 * h);
    case 2: return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
    case 3: return (f(2.0 * h) - 2.0 * f(h) + 2.0 * f(-h) - f(-2.0 * h)) / (2.0 * h * h * h);
    case 4:
      return (f(2.0 * h) - 4.0 * f(h) + 6.0 * f(0.0) - 4.0 * f(-h) + f(-2.0 * h)) /
             (h * h * h * h);
    default: throw std::domain_error("mgf_derivative_check: n must be 1..4");
  }
}

}  // namespace

OracleReport mgf_derivative_check(std::int64_t n, const OrderKParams& params, double step,
                                  double tolerance) {
  if (n < 1 || n > 4) throw std::domain_error("mgf_derivative_check: n must be 1..4");
  if (!(step > 0.0) || step > 1e-2)
    throw std::domain_error("mgf_derivative_check: need 0 < step <= 1e-2");

  double estimate = nth_difference(n, params, step);
  if (n >= 3) {
    // one Richardson step on the order-2 stencil
    const double half = nth_difference(n, params, step / 2.0);
    estimate = (4.0 * half - estimate) / 3.0;
  }

  const double exact =
      raw_moment_recurrence(n, params.k).poly.eval_double(params.lambda_double());

  std::ostringstream label;
  label << "d" << n << "M/dt" << n << "@0 k=" << params.k
        << " lambda=" << params.lambda_double() << " step=" << step;
  // rounding noise of the quotient is about |f| * eps / h^n; flag steps small
  // enough that it swamps the requested tolerance
  const double noise =
      8.0 * mgf(0.0, params) * 1e-16 / std::pow(step, static_cast<double>(n));
  if (noise > std::fabs(exact) * tolerance) {
    std::fprintf(stderr, "warning: %s: step too small, estimate dominated by cancellation\n",
                 label.str().c_str());
    label << " [unreliable-step]";
  }
  return make_report(label.str(), exact, estimate, tolerance);
}

}  // namespace orderk
