#include "updown/rational.hpp"

#include <stdexcept>

#include "updown/object_id.hpp"

namespace updown {

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

Int factorial(std::uint64_t n) {
  Int out = 1;
  for (std::uint64_t k = 2; k <= n; ++k) out *= k;
  return out;
}

Int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;  // exact: out is binomial(n, i+1) times earlier factors
  }
  return out;
}

std::string to_string(const ObjectId& id) {
  return "(" + std::to_string(id.rank) + "," + std::to_string(id.index) + ")";
}

}  // namespace updown
