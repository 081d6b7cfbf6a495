#ifndef ORDERK_RATIONAL_HPP
#define ORDERK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace orderk {

// Arbitrary-precision integers and canonical-form rationals.
// cpp_rational keeps gcd(|num|, den) = 1 and den > 0 after every operation,
// so exact equality is plain operator==.
using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Renders a rational as "num/den", always with the denominator ("3/1", "-1/2").
std::string rational_to_string(const ExactRational& r);

/// Parses "p/q", a plain integer, or a decimal literal ("0.25" -> 1/4 via a
/// power-of-ten denominator). Throws std::invalid_argument on malformed input
/// or a zero denominator.
ExactRational rational_from_string(const std::string& text);

/// Nearest-double conversion that survives numerators/denominators beyond
/// double range (works through log2 scaling).
double rational_to_double(const ExactRational& r);

/// log(x) for a positive big integer, usable far beyond double range.
double log_bigint(const BigInt& x);

}  // namespace orderk

#endif
