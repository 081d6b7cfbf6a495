#ifndef ORDERK_POLYNOMIAL_HPP
#define ORDERK_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "orderk/rational.hpp"

namespace orderk {

// Dense polynomial in the rate parameter lambda over ExactRational.
// Coefficients are stored ascending by power and trimmed so the highest
// stored coefficient is nonzero; the zero polynomial stores nothing.
// Values are immutable after construction.
class LambdaPolynomial {
 public:
  LambdaPolynomial() = default;  // zero polynomial
  explicit LambdaPolynomial(std::vector<ExactRational> coefficients);

  static LambdaPolynomial constant(const ExactRational& c);
  /// c * lambda^power
  static LambdaPolynomial monomial(const ExactRational& c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ExactRational>& coefficients() const { return coeffs_; }
  /// Coefficient of lambda^i (zero beyond the stored range).
  ExactRational coefficient(std::size_t i) const;

  LambdaPolynomial operator+(const LambdaPolynomial& rhs) const;
  LambdaPolynomial operator-(const LambdaPolynomial& rhs) const;
  LambdaPolynomial operator-() const;
  LambdaPolynomial operator*(const LambdaPolynomial& rhs) const;
  LambdaPolynomial operator*(const ExactRational& c) const;
  LambdaPolynomial pow(std::size_t e) const;
  /// Multiplication by lambda^shift.
  LambdaPolynomial shifted(std::size_t shift) const;

  bool operator==(const LambdaPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const LambdaPolynomial& rhs) const { return !(*this == rhs); }

  /// Exact Horner evaluation.
  ExactRational operator()(const ExactRational& lambda) const;
  /// Horner evaluation in double precision.
  double eval_double(double lambda) const;

  // Wire format: ascending powers, each coefficient as "num/den".
  // The zero polynomial serializes to an empty list.
  std::vector<std::string> to_strings() const;
  static LambdaPolynomial from_strings(const std::vector<std::string>& coeffs);

  std::string pretty(const std::string& var = "lambda") const;

 private:
  void trim();
  std::vector<ExactRational> coeffs_;
};

inline LambdaPolynomial operator*(const ExactRational& c, const LambdaPolynomial& p) {
  return p * c;
}

}  // namespace orderk

#endif
