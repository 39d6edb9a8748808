#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace updown {

// All arithmetic in this library is exact.  Int is an arbitrary-precision
// integer, Rational a quotient of two of them kept in lowest terms.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "num/den" in lowest terms, "/den" omitted when the
/// denominator is 1.  Every emitter (CSV, JSON, reports) uses this.
std::string format_rational(const Rational& value);

/// Inverse of format_rational.  Throws std::invalid_argument on bad input.
Rational parse_rational(const std::string& text);

Int factorial(std::uint64_t n);
Int binomial(std::uint64_t n, std::uint64_t k);

}  // namespace updown
