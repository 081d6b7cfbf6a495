#include "orderk/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace orderk {

LambdaPolynomial::LambdaPolynomial(std::vector<ExactRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void LambdaPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

LambdaPolynomial LambdaPolynomial::constant(const ExactRational& c) {
  return LambdaPolynomial(std::vector<ExactRational>{c});
}

LambdaPolynomial LambdaPolynomial::monomial(const ExactRational& c, std::size_t power) {
  std::vector<ExactRational> v(power + 1, ExactRational(0));
  v[power] = c;
  return LambdaPolynomial(std::move(v));
}

ExactRational LambdaPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ExactRational(0);
}

LambdaPolynomial LambdaPolynomial::operator+(const LambdaPolynomial& rhs) const {
  std::vector<ExactRational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), ExactRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return LambdaPolynomial(std::move(out));
}

LambdaPolynomial LambdaPolynomial::operator-() const {
  std::vector<ExactRational> out(coeffs_);
  for (auto& c : out) c = -c;
  return LambdaPolynomial(std::move(out));
}

LambdaPolynomial LambdaPolynomial::operator-(const LambdaPolynomial& rhs) const {
  return *this + (-rhs);
}

LambdaPolynomial LambdaPolynomial::operator*(const LambdaPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<ExactRational> out(coeffs_.size() + rhs.coeffs_.size() - 1, ExactRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return LambdaPolynomial(std::move(out));
}

LambdaPolynomial LambdaPolynomial::operator*(const ExactRational& c) const {
  if (c == 0) return {};
  std::vector<ExactRational> out(coeffs_);
  for (auto& x : out) x *= c;
  return LambdaPolynomial(std::move(out));
}

LambdaPolynomial LambdaPolynomial::pow(std::size_t e) const {
  LambdaPolynomial result = constant(1);
  for (std::size_t i = 0; i < e; ++i) result = result * *this;
  return result;
}

LambdaPolynomial LambdaPolynomial::shifted(std::size_t shift) const {
  if (is_zero() || shift == 0) {
    if (shift == 0) return *this;
    return {};
  }
  std::vector<ExactRational> out(coeffs_.size() + shift, ExactRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + shift] = coeffs_[i];
  return LambdaPolynomial(std::move(out));
}

ExactRational LambdaPolynomial::operator()(const ExactRational& lambda) const {
  ExactRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

double LambdaPolynomial::eval_double(double lambda) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * lambda + rational_to_double(*it);
  return acc;
}

std::vector<std::string> LambdaPolynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(rational_to_string(c));
  return out;
}

LambdaPolynomial LambdaPolynomial::from_strings(const std::vector<std::string>& coeffs) {
  std::vector<ExactRational> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(rational_from_string(s));
  return LambdaPolynomial(std::move(v));
}

std::string LambdaPolynomial::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  auto coeff_str = [](const ExactRational& mag) {
    return denominator(mag) == 1 ? numerator(mag).str() : rational_to_string(mag);
  };
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const ExactRational& c = coeffs_[i];
    if (c == 0) continue;
    ExactRational mag = c < 0 ? ExactRational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      os << coeff_str(mag);
    } else {
      if (!unit) os << coeff_str(mag) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace orderk
