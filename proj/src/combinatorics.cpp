#include "orderk/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace orderk {

namespace {

// Both triangles grow on demand under a lock; lookups copy the entry out so
// readers never hold references into a vector that may reallocate.
std::mutex g_pascal_mutex;
std::vector<std::vector<BigInt>> g_pascal;

std::mutex g_stirling_mutex;
std::vector<std::vector<BigInt>> g_stirling;

void grow_pascal(std::size_t n) {
  if (g_pascal.empty()) g_pascal.push_back({BigInt(1)});
  while (g_pascal.size() <= n) {
    const auto& prev = g_pascal.back();
    std::vector<BigInt> row(prev.size() + 1, BigInt(1));
    for (std::size_t j = 1; j < prev.size(); ++j) row[j] = prev[j - 1] + prev[j];
    g_pascal.push_back(std::move(row));
  }
}

void grow_stirling(std::size_t n) {
  if (g_stirling.empty()) g_stirling.push_back({BigInt(1)});  // {0,0} = 1
  while (g_stirling.size() <= n) {
    const auto& prev = g_stirling.back();
    std::size_t m = g_stirling.size();
    std::vector<BigInt> row(m + 1, BigInt(0));
    for (std::size_t j = 1; j <= m; ++j) {
      BigInt above = j < prev.size() ? prev[j] : BigInt(0);
      row[j] = BigInt(j) * above + prev[j - 1];
    }
    g_stirling.push_back(std::move(row));
  }
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t j) {
  if (n < 0) throw std::domain_error("binomial: n must be non-negative");
  if (j < 0 || j > n) return 0;
  std::lock_guard<std::mutex> lock(g_pascal_mutex);
  grow_pascal(static_cast<std::size_t>(n));
  return g_pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

BigInt stirling2(std::int64_t n, std::int64_t j) {
  if (n < 0 || j < 0) throw std::domain_error("stirling2: arguments must be non-negative");
  if (j > n) return 0;
  std::lock_guard<std::mutex> lock(g_stirling_mutex);
  grow_stirling(static_cast<std::size_t>(n));
  return g_stirling[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

BigInt falling_factorial(std::int64_t s, std::int64_t j) {
  if (s < 0 || j < 0) throw std::domain_error("falling_factorial: arguments must be non-negative");
  if (j > s) return 0;
  BigInt p = 1;
  for (std::int64_t i = 0; i < j; ++i) p *= (s - i);
  return p;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial: n must be non-negative");
  BigInt p = 1;
  for (std::int64_t i = 2; i <= n; ++i) p *= i;
  return p;
}

BigInt falling_factorial_sum(std::int64_t j, std::int64_t k) {
  if (j < 0 || k < 1) throw std::domain_error("falling_factorial_sum: need j >= 0, k >= 1");
  if (j == 0) return k;
  return factorial(j) * binomial(k + 1, j + 1);
}

BigInt power_sum(std::int64_t j, std::int64_t k) {
  if (j < 0 || k < 1) throw std::domain_error("power_sum: need j >= 0, k >= 1");
  BigInt total = 0;
  for (std::int64_t s = 1; s <= k; ++s) {
    BigInt p = 1;
    for (std::int64_t i = 0; i < j; ++i) p *= s;
    total += p;
  }
  return total;
}

namespace {

void visit_compositions(std::int64_t remaining, std::int64_t part,
                        Composition& comp,
                        const std::function<void(const Composition&)>& visit) {
  if (part == 1) {
    comp.parts[0] = remaining;
    visit(comp);
    comp.parts[0] = 0;
    return;
  }
  for (std::int64_t m = 0; m * part <= remaining; ++m) {
    comp.parts[static_cast<std::size_t>(part - 1)] = m;
    visit_compositions(remaining - m * part, part - 1, comp, visit);
  }
  comp.parts[static_cast<std::size_t>(part - 1)] = 0;
}

}  // namespace

void for_each_composition(std::int64_t n, std::int64_t k,
                          const std::function<void(const Composition&)>& visit) {
  if (n < 0 || k < 1) throw std::domain_error("for_each_composition: need n >= 0, k >= 1");
  Composition comp;
  comp.parts.assign(static_cast<std::size_t>(k), 0);
  comp.n = n;
  comp.k = k;
  visit_compositions(n, k, comp, visit);
}

std::vector<Composition> enumerate_compositions(std::int64_t n, std::int64_t k) {
  std::vector<Composition> out;
  for_each_composition(n, k, [&](const Composition& c) { out.push_back(c); });
  return out;
}

}  // namespace orderk
