#pragma once

#include <cstddef>
#include <vector>

#include "updown/rational.hpp"

namespace updown {

/// A power series over the rationals truncated at a chosen order: exactly
/// order+1 coefficients, index = power of t.  All operations use standard
/// truncated-series semantics and are exact.
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit RationalSeries(std::vector<Rational> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t power) const { return coeffs_.at(power); }
  Rational& operator[](std::size_t power) { return coeffs_.at(power); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

  static RationalSeries constant(const Rational& c, std::size_t order);
  static RationalSeries t(std::size_t order);

 private:
  std::vector<Rational> coeffs_;
};

// Binary operations truncate to the smaller operand order.
RationalSeries add(const RationalSeries& a, const RationalSeries& b);
RationalSeries sub(const RationalSeries& a, const RationalSeries& b);
RationalSeries mul(const RationalSeries& a, const RationalSeries& b);
RationalSeries scale(const Rational& c, const RationalSeries& a);

/// Exact truncation (or zero-extension) to the given order.
RationalSeries truncate(const RationalSeries& a, std::size_t order);

/// Termwise derivative; the result has order-1 (empty order collapses to 0).
RationalSeries derivative(const RationalSeries& a);

/// f(g); g must have zero constant term.  Throws InvalidConstantTerm.
RationalSeries compose(const RationalSeries& f, const RationalSeries& g);

/// Multiplication by t^k (with truncation) and exact division by t^k (the
/// k lowest coefficients must vanish; throws InvalidConstantTerm otherwise).
RationalSeries shift_up(const RationalSeries& a, std::size_t k = 1);
RationalSeries shift_down(const RationalSeries& a, std::size_t k = 1);

/// 1/f for f with nonzero constant term.  Throws InvalidConstantTerm.
RationalSeries reciprocal(const RationalSeries& a);

/// exp(f) for f with zero constant term, via g' = f' g.
RationalSeries exp(const RationalSeries& a);

/// log(f) for f with constant term 1, by integrating f'/f.
RationalSeries log(const RationalSeries& a);

/// sqrt(f) for f with constant term 1.
RationalSeries sqrt(const RationalSeries& a);

/// f^n by repeated multiplication.
RationalSeries pow(const RationalSeries& a, std::uint64_t n);

}  // namespace updown
