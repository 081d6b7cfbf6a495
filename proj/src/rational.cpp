#include "orderk/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace orderk {

std::string rational_to_string(const ExactRational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

ExactRational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  auto is_integer = [](const std::string& s) {
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den))
      throw std::invalid_argument("malformed rational: " + text);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return ExactRational(BigInt(num), d);
  }

  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (head.empty() || head == "+" || head == "-") head += "0";
    if (!is_integer(head)) throw std::invalid_argument("malformed decimal: " + text);
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed decimal: " + text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt whole(head);
    BigInt digits = frac.empty() ? BigInt(0) : BigInt(frac);
    bool neg = text[0] == '-';
    BigInt num = abs(whole) * scale + digits;
    if (neg) num = -num;
    return ExactRational(num, scale);
  }

  if (!is_integer(text)) throw std::invalid_argument("malformed rational: " + text);
  return ExactRational(BigInt(text));
}

double log_bigint(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_bigint requires a positive argument");
  const unsigned bits = msb(x);
  if (bits < 512) return std::log(x.convert_to<double>());
  BigInt top = x >> (bits - 52);
  return std::log(top.convert_to<double>()) +
         static_cast<double>(bits - 52) * std::log(2.0);
}

double rational_to_double(const ExactRational& r) {
  if (r == 0) return 0.0;
  const BigInt num = abs(numerator(r));
  const BigInt den = denominator(r);
  if (msb(num) < 900 && msb(den) < 900) return r.convert_to<double>();
  double lg = log_bigint(num) - log_bigint(den);
  double v = std::exp(lg);
  return r < 0 ? -v : v;
}

}  // namespace orderk
