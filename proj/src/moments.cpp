#include "orderk/moments.hpp"

#include <stdexcept>

#include "orderk/combinatorics.hpp"

namespace orderk {

std::string to_string(MomentKind kind) {
  switch (kind) {
    case MomentKind::Raw: return "raw";
    case MomentKind::Factorial: return "factorial";
    case MomentKind::Central: return "central";
  }
  return "?";
}

std::string to_string(MomentMethod method) {
  switch (method) {
    case MomentMethod::Recurrence: return "recurrence";
    case MomentMethod::CombinatorialSum: return "sum";
    case MomentMethod::Conversion: return "conversion";
  }
  return "?";
}

MomentEngine::MomentEngine(std::int64_t k) : k_(k) {
  if (k < 1) throw std::domain_error("MomentEngine: k must be >= 1");
  raw_.push_back(LambdaPolynomial::constant(1));
  factorial_.push_back(LambdaPolynomial::constant(1));
  central_.push_back(LambdaPolynomial::constant(1));
  central_.push_back(LambdaPolynomial());  // seed: first central moment is 0
}

const LambdaPolynomial& MomentEngine::cached_raw(std::int64_t n) {
  while (static_cast<std::int64_t>(raw_.size()) <= n) {
    const std::int64_t m = static_cast<std::int64_t>(raw_.size());
    LambdaPolynomial acc;
    for (std::int64_t j = 1; j <= m; ++j)
      acc = acc + raw_[static_cast<std::size_t>(m - j)] *
                      ExactRational(binomial(m - 1, j - 1) * power_sum(j, k_));
    raw_.push_back(acc.shifted(1));
  }
  return raw_[static_cast<std::size_t>(n)];
}

const LambdaPolynomial& MomentEngine::cached_factorial(std::int64_t n) {
  while (static_cast<std::int64_t>(factorial_.size()) <= n) {
    const std::int64_t m = static_cast<std::int64_t>(factorial_.size());
    LambdaPolynomial acc;
    // cuts off at min(m, k): the falling-factorial sum vanishes beyond k
    for (std::int64_t j = 1; j <= std::min(m, k_); ++j)
      acc = acc + factorial_[static_cast<std::size_t>(m - j)] *
                      ExactRational(binomial(m - 1, j - 1) * falling_factorial_sum(j, k_));
    factorial_.push_back(acc.shifted(1));
  }
  return factorial_[static_cast<std::size_t>(n)];
}

const LambdaPolynomial& MomentEngine::cached_central(std::int64_t n) {
  while (static_cast<std::int64_t>(central_.size()) <= n) {
    const std::int64_t m = static_cast<std::int64_t>(central_.size());
    LambdaPolynomial acc;
    for (std::int64_t j = 2; j <= m; ++j)
      acc = acc + central_[static_cast<std::size_t>(m - j)] *
                      ExactRational(binomial(m - 1, j - 1) * power_sum(j, k_));
    central_.push_back(acc.shifted(1));
  }
  return central_[static_cast<std::size_t>(n)];
}

MomentResult MomentEngine::raw_recurrence(std::int64_t n) {
  if (n < 0) throw std::domain_error("moment order must be >= 0");
  std::lock_guard<std::mutex> lock(mutex_);
  return {MomentKind::Raw, n, k_, cached_raw(n), MomentMethod::Recurrence};
}

MomentResult MomentEngine::factorial_recurrence(std::int64_t n) {
  if (n < 0) throw std::domain_error("moment order must be >= 0");
  std::lock_guard<std::mutex> lock(mutex_);
  return {MomentKind::Factorial, n, k_, cached_factorial(n), MomentMethod::Recurrence};
}

MomentResult MomentEngine::central_recurrence(std::int64_t n) {
  if (n < 0) throw std::domain_error("moment order must be >= 0");
  std::lock_guard<std::mutex> lock(mutex_);
  return {MomentKind::Central, n, k_, cached_central(n), MomentMethod::Recurrence};
}

namespace {

// n! * sum over compositions of prod_j (lambda^{n_j}/n_j!) * weight(j)^{n_j}.
// skip_part_one restricts the index set to n_1 = 0 (the central family).
// max_part is n for the power-sum families (their weights never vanish) and
// k for the factorial family (the weight is 0 beyond part size k anyway).
LambdaPolynomial composition_sum(std::int64_t n, std::int64_t max_part, bool skip_part_one,
                                 const std::function<ExactRational(std::int64_t)>& weight) {
  LambdaPolynomial total;
  const std::int64_t k = std::max<std::int64_t>(max_part, 1);
  for_each_composition(n, k, [&](const Composition& c) {
    if (skip_part_one && c.parts[0] > 0) return;
    ExactRational term = 1;
    std::int64_t power = 0;
    for (std::int64_t j = 1; j <= k; ++j) {
      const std::int64_t m = c.parts[static_cast<std::size_t>(j - 1)];
      if (m == 0) continue;
      power += m;
      ExactRational w = weight(j);
      ExactRational wp = 1;
      for (std::int64_t i = 0; i < m; ++i) wp *= w;
      term *= wp / ExactRational(factorial(m));
    }
    total = total + LambdaPolynomial::monomial(term, static_cast<std::size_t>(power));
  });
  return total * ExactRational(factorial(n));
}

}  // namespace

MomentResult MomentEngine::raw_sum(std::int64_t n) {
  if (n < 0) throw std::domain_error("moment order must be >= 0");
  auto poly = composition_sum(n, n, false, [this](std::int64_t j) {
    return ExactRational(power_sum(j, k_), factorial(j));
  });
  return {MomentKind::Raw, n, k_, poly, MomentMethod::CombinatorialSum};
}

MomentResult MomentEngine::factorial_sum(std::int64_t n) {
  if (n < 0) throw std::domain_error("moment order must be >= 0");
  auto poly = composition_sum(n, k_, false, [this](std::int64_t j) {
    return ExactRational(binomial(k_ + 1, j + 1));
  });
  return {MomentKind::Factorial, n, k_, poly, MomentMethod::CombinatorialSum};
}

MomentResult MomentEngine::central_sum(std::int64_t n) {
  if (n < 0) throw std::domain_error("moment order must be >= 0");
  if (n == 0)
    return {MomentKind::Central, n, k_, LambdaPolynomial::constant(1),
            MomentMethod::CombinatorialSum};
  if (n == 1)
    return {MomentKind::Central, n, k_, LambdaPolynomial(), MomentMethod::CombinatorialSum};
  auto poly = composition_sum(n, n, true, [this](std::int64_t j) {
    return ExactRational(power_sum(j, k_), factorial(j));
  });
  return {MomentKind::Central, n, k_, poly, MomentMethod::CombinatorialSum};
}

MomentResult MomentEngine::raw_from_factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("moment order must be >= 0");
  std::lock_guard<std::mutex> lock(mutex_);
  LambdaPolynomial acc;
  for (std::int64_t j = 0; j <= n; ++j)
    acc = acc + cached_factorial(j) * ExactRational(stirling2(n, j));
  return {MomentKind::Raw, n, k_, acc, MomentMethod::Conversion};
}

MomentResult MomentEngine::central_from_raw(std::int64_t n) {
  if (n < 0) throw std::domain_error("moment order must be >= 0");
  std::lock_guard<std::mutex> lock(mutex_);
  const LambdaPolynomial neg_mu =
      LambdaPolynomial::monomial(-ExactRational(power_sum(1, k_)), 1);
  LambdaPolynomial acc;
  for (std::int64_t j = 0; j <= n; ++j)
    acc = acc + cached_raw(j) * neg_mu.pow(static_cast<std::size_t>(n - j)) *
                    ExactRational(binomial(n, j));
  return {MomentKind::Central, n, k_, acc, MomentMethod::Conversion};
}

MomentResult MomentEngine::compute(MomentKind kind, MomentMethod method, std::int64_t n) {
  switch (method) {
    case MomentMethod::Recurrence:
      switch (kind) {
        case MomentKind::Raw: return raw_recurrence(n);
        case MomentKind::Factorial: return factorial_recurrence(n);
        case MomentKind::Central: return central_recurrence(n);
      }
      break;
    case MomentMethod::CombinatorialSum:
      switch (kind) {
        case MomentKind::Raw: return raw_sum(n);
        case MomentKind::Factorial: return factorial_sum(n);
        case MomentKind::Central: return central_sum(n);
      }
      break;
    case MomentMethod::Conversion:
      switch (kind) {
        case MomentKind::Raw: return raw_from_factorial(n);
        case MomentKind::Central: return central_from_raw(n);
        case MomentKind::Factorial:
          throw std::invalid_argument("no conversion route produces factorial moments");
      }
      break;
  }
  throw std::invalid_argument("unknown moment kind/method");
}

LambdaPolynomial touchard_raw_moment(std::int64_t n) {
  if (n < 0) throw std::domain_error("moment order must be >= 0");
  LambdaPolynomial acc;
  for (std::int64_t j = 0; j <= n; ++j)
    acc = acc + LambdaPolynomial::monomial(ExactRational(stirling2(n, j)),
                                           static_cast<std::size_t>(j));
  return acc;
}

MomentResult raw_moment_recurrence(std::int64_t n, std::int64_t k) {
  return MomentEngine(k).raw_recurrence(n);
}
MomentResult raw_moment_sum(std::int64_t n, std::int64_t k) {
  return MomentEngine(k).raw_sum(n);
}
MomentResult factorial_moment_recurrence(std::int64_t n, std::int64_t k) {
  return MomentEngine(k).factorial_recurrence(n);
}
MomentResult factorial_moment_sum(std::int64_t n, std::int64_t k) {
  return MomentEngine(k).factorial_sum(n);
}
MomentResult central_moment_recurrence(std::int64_t n, std::int64_t k) {
  return MomentEngine(k).central_recurrence(n);
}
MomentResult central_moment_sum(std::int64_t n, std::int64_t k) {
  return MomentEngine(k).central_sum(n);
}
MomentResult raw_from_factorial(std::int64_t n, std::int64_t k) {
  return MomentEngine(k).raw_from_factorial(n);
}
MomentResult central_from_raw(std::int64_t n, std::int64_t k) {
  return MomentEngine(k).central_from_raw(n);
}

}  // namespace orderk
