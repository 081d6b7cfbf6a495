#ifndef ORDERK_MOMENTS_HPP
#define ORDERK_MOMENTS_HPP

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "orderk/polynomial.hpp"

namespace orderk {

enum class MomentKind { Raw, Factorial, Central };
enum class MomentMethod { Recurrence, CombinatorialSum, Conversion };

std::string to_string(MomentKind kind);
std::string to_string(MomentMethod method);

struct MomentResult {
  MomentKind kind;
  std::int64_t n;
  std::int64_t k;
  LambdaPolynomial poly;
  MomentMethod method;
};

// Exact moment polynomials of the order-k distribution for one fixed k.
// The recurrence routes cache every lower moment; caches are grown lazily
// under a lock, so one engine may be shared across threads.
class MomentEngine {
 public:
  explicit MomentEngine(std::int64_t k);

  std::int64_t order() const { return k_; }

  // Recurrence routes (the default engines).
  MomentResult raw_recurrence(std::int64_t n);
  MomentResult factorial_recurrence(std::int64_t n);
  MomentResult central_recurrence(std::int64_t n);

  // Combinatorial-sum routes: n! * sum over compositions of weight products.
  // Raw and central sums index over part sizes up to n (power-sum weights
  // never vanish); the central sum further restricts to n_1 = 0.
  MomentResult raw_sum(std::int64_t n);
  MomentResult factorial_sum(std::int64_t n);
  MomentResult central_sum(std::int64_t n);

  // Conversion routes between families.
  MomentResult raw_from_factorial(std::int64_t n);
  MomentResult central_from_raw(std::int64_t n);

  MomentResult compute(MomentKind kind, MomentMethod method, std::int64_t n);

 private:
  const LambdaPolynomial& cached_raw(std::int64_t n);
  const LambdaPolynomial& cached_factorial(std::int64_t n);
  const LambdaPolynomial& cached_central(std::int64_t n);

  std::int64_t k_;
  std::mutex mutex_;
  std::vector<LambdaPolynomial> raw_;
  std::vector<LambdaPolynomial> factorial_;
  std::vector<LambdaPolynomial> central_;
};

/// Raw moment of the standard Poisson distribution: sum_j {n, j} lambda^j.
LambdaPolynomial touchard_raw_moment(std::int64_t n);

// Free-function wrappers for one-shot queries.
MomentResult raw_moment_recurrence(std::int64_t n, std::int64_t k);
MomentResult raw_moment_sum(std::int64_t n, std::int64_t k);
MomentResult factorial_moment_recurrence(std::int64_t n, std::int64_t k);
MomentResult factorial_moment_sum(std::int64_t n, std::int64_t k);
MomentResult central_moment_recurrence(std::int64_t n, std::int64_t k);
MomentResult central_moment_sum(std::int64_t n, std::int64_t k);
MomentResult raw_from_factorial(std::int64_t n, std::int64_t k);
MomentResult central_from_raw(std::int64_t n, std::int64_t k);

}  // namespace orderk

#endif
