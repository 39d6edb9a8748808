#include "updown/series.hpp"

#include <algorithm>

#include "updown/errors.hpp"

namespace updown {

RationalSeries::RationalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

RationalSeries RationalSeries::constant(const Rational& c, std::size_t order) {
  RationalSeries s(order);
  s[0] = c;
  return s;
}

RationalSeries RationalSeries::t(std::size_t order) {
  RationalSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

namespace {

std::size_t common_order(const RationalSeries& a, const RationalSeries& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

RationalSeries add(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries out(common_order(a, b));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalSeries sub(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries out(common_order(a, b));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalSeries mul(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries out(common_order(a, b));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= out.order() && j <= b.order(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

RationalSeries scale(const Rational& c, const RationalSeries& a) {
  RationalSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) out[i] = c * a[i];
  return out;
}

RationalSeries truncate(const RationalSeries& a, std::size_t order) {
  RationalSeries out(order);
  for (std::size_t i = 0; i <= std::min(order, a.order()); ++i) out[i] = a[i];
  return out;
}

RationalSeries derivative(const RationalSeries& a) {
  RationalSeries out(a.order() == 0 ? 0 : a.order() - 1);
  for (std::size_t i = 1; i <= a.order(); ++i) out[i - 1] = a[i] * i;
  return out;
}

RationalSeries compose(const RationalSeries& f, const RationalSeries& g) {
  if (g[0] != 0) {
    throw InvalidConstantTerm("compose requires an inner series with zero constant term");
  }
  const std::size_t order = common_order(f, g);
  // Horner from the top coefficient down.
  RationalSeries out = RationalSeries::constant(f[f.order()], order);
  for (std::size_t k = f.order(); k-- > 0;) {
    out = mul(out, truncate(g, order));
    out[0] += f[k];
  }
  return out;
}

RationalSeries shift_up(const RationalSeries& a, std::size_t k) {
  RationalSeries out(a.order());
  for (std::size_t i = k; i <= a.order(); ++i) out[i] = a[i - k];
  return out;
}

RationalSeries shift_down(const RationalSeries& a, std::size_t k) {
  for (std::size_t i = 0; i < std::min(k, a.order() + 1); ++i) {
    if (a[i] != 0) {
      throw InvalidConstantTerm("shift_down requires the low coefficients to vanish");
    }
  }
  if (a.order() < k) return RationalSeries(0);
  RationalSeries out(a.order() - k);
  for (std::size_t i = k; i <= a.order(); ++i) out[i - k] = a[i];
  return out;
}

RationalSeries reciprocal(const RationalSeries& a) {
  if (a[0] == 0) {
    throw InvalidConstantTerm("reciprocal requires a nonzero constant term");
  }
  RationalSeries out(a.order());
  const Rational inv = Rational(1) / a[0];
  out[0] = inv;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * out[n - k];
    out[n] = -inv * acc;
  }
  return out;
}

RationalSeries exp(const RationalSeries& a) {
  if (a[0] != 0) {
    throw InvalidConstantTerm("exp requires a zero constant term");
  }
  // g' = a' g, solved coefficientwise: n g_n = sum_{k=1..n} k a_k g_{n-k}.
  RationalSeries out(a.order());
  out[0] = 1;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(k) * a[k] * out[n - k];
    out[n] = acc / n;
  }
  return out;
}

RationalSeries log(const RationalSeries& a) {
  if (a[0] != 1) {
    throw InvalidConstantTerm("log requires a constant term of 1");
  }
  // log(a) = integral of a'/a.
  RationalSeries quotient = mul(derivative(a), truncate(reciprocal(a), a.order() == 0 ? 0 : a.order() - 1));
  RationalSeries out(a.order());
  for (std::size_t n = 1; n <= a.order(); ++n) out[n] = quotient[n - 1] / n;
  return out;
}

RationalSeries sqrt(const RationalSeries& a) {
  if (a[0] != 1) {
    throw InvalidConstantTerm("sqrt requires a constant term of 1");
  }
  RationalSeries out(a.order());
  out[0] = 1;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k < n; ++k) acc += out[k] * out[n - k];
    out[n] = (a[n] - acc) / 2;
  }
  return out;
}

RationalSeries pow(const RationalSeries& a, std::uint64_t n) {
  RationalSeries out = RationalSeries::constant(1, a.order());
  for (std::uint64_t i = 0; i < n; ++i) out = mul(out, a);
  return out;
}

}  // namespace updown
