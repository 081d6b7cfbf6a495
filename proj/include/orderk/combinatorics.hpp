#ifndef ORDERK_COMBINATORICS_HPP
#define ORDERK_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "orderk/rational.hpp"

namespace orderk {

/// Binomial coefficient C(n, j). Requires n >= 0; returns 0 for j < 0 or j > n.
/// Backed by a cached Pascal triangle, safe for concurrent callers.
BigInt binomial(std::int64_t n, std::int64_t j);

/// Stirling number of the second kind {n, j} via the triangle recurrence
/// {n,j} = j*{n-1,j} + {n-1,j-1}, memoized. {0,0} = 1; zero for j > n and
/// for j = 0 with n > 0.
BigInt stirling2(std::int64_t n, std::int64_t j);

/// Falling factorial s_(j) = s(s-1)...(s-j+1). 1 for j = 0, 0 for j > s.
BigInt falling_factorial(std::int64_t s, std::int64_t j);

BigInt factorial(std::int64_t n);

/// Sum of falling factorials over s = j..k; equals j! * C(k+1, j+1) and
/// vanishes for j > k. The j = 0 value is k (the z = 1 value of the plain
/// power sum of z^s, which is what the j = 0 member of the family denotes).
BigInt falling_factorial_sum(std::int64_t j, std::int64_t k);

/// Power sum 1^j + 2^j + ... + k^j.
BigInt power_sum(std::int64_t j, std::int64_t k);

// A vector (n_1, ..., n_k) of multiplicities with sum j*n_j = n: one term of
// each combinatorial sum over the support of the order-k distribution.
struct Composition {
  std::vector<std::int64_t> parts;  // parts[j-1] = n_j
  std::int64_t n = 0;
  std::int64_t k = 0;
};

/// Streams every composition exactly once in a deterministic order (n_k
/// varies slowest ... n_2, with n_1 fixed by the remainder). For n = 0 the
/// single all-zero vector is produced.
void for_each_composition(std::int64_t n, std::int64_t k,
                          const std::function<void(const Composition&)>& visit);

/// Materialized variant, mainly for tests and small n.
std::vector<Composition> enumerate_compositions(std::int64_t n, std::int64_t k);

}  // namespace orderk

#endif
