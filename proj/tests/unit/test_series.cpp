#include <doctest.h>

#include <random>

#include "test_support.hpp"

using namespace updown;

namespace {

// Independent oracle for the coefficients of exp(t/(1-t)): sum over the
// partitions of n of 1/(m_1! m_2! ...), enumerated directly.
Rational partition_aut_sum(std::uint64_t n) {
  Rational total = 0;
  std::vector<std::uint64_t> current;
  std::function<void(std::uint64_t, std::uint64_t)> recurse = [&](std::uint64_t remaining,
                                                                  std::uint64_t largest) {
    if (remaining == 0) {
      Int aut = 1;
      std::size_t i = 0;
      while (i < current.size()) {
        std::size_t j = i;
        while (j < current.size() && current[j] == current[i]) ++j;
        for (std::size_t m = 2; m <= j - i; ++m) aut *= m;
        i = j;
      }
      total += Rational(1, aut);
      return;
    }
    for (std::uint64_t part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      recurse(remaining - part, part);
      current.pop_back();
    }
  };
  recurse(n, n == 0 ? 1 : n);
  return total;
}

RationalSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
  RationalSeries s(order);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 6);
  for (std::size_t k = 0; k <= order; ++k) s[k] = Rational(num(rng), den(rng));
  if (unit_constant) s[0] = 1;
  return s;
}

}  // namespace

TEST_CASE("exp of the geometric series counts partitions by automorphisms") {
  const std::size_t order = 8;
  RationalSeries geom(order);
  for (std::size_t k = 1; k <= order; ++k) geom[k] = 1;  // t/(1-t)
  const RationalSeries e = exp(geom);
  for (std::size_t n = 0; n <= order; ++n) {
    CHECK(e[n] == partition_aut_sum(n));
  }
  CHECK(e[0] == 1);
  CHECK(e[1] == 1);
  CHECK(e[2] == Rational(3, 2));
  CHECK(e[3] == Rational(13, 6));
}

TEST_CASE("catalan numbers from the square root closed form") {
  const std::size_t order = 6;
  RationalSeries inner = RationalSeries::constant(1, order + 1);
  inner[1] = -4;
  const RationalSeries cat = shift_down(scale(Rational(1, 2), sub(
      RationalSeries::constant(1, order + 1), sqrt(inner))));
  const std::vector<std::uint64_t> expected{1, 1, 2, 5, 14, 42, 132};
  for (std::size_t n = 0; n <= order; ++n) CHECK(cat[n] == expected[n]);
}

TEST_CASE("log expansion of the necklace object series") {
  const std::size_t order = 3;
  RationalSeries inner = RationalSeries::constant(1, order);
  inner[1] = -2;
  const RationalSeries s = sub(RationalSeries::constant(1, order), log(inner));
  CHECK(s[0] == 1);
  CHECK(s[1] == 2);
  CHECK(s[2] == 2);
  CHECK(s[3] == Rational(8, 3));
}

TEST_CASE("series ops satisfy the usual identities on random input") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalSeries f = random_series(rng, 10, true);
    CHECK(exp(log(f)) == f);
    CHECK(mul(sqrt(f), sqrt(f)) == f);
    CHECK(mul(f, reciprocal(f)) == RationalSeries::constant(1, 10));

    RationalSeries g = random_series(rng, 10, false);
    g[0] = 0;
    // d/dt exp(g) = g' exp(g)
    CHECK(derivative(exp(g)) == truncate(mul(derivative(g), truncate(exp(g), 9)), 9));
    // composition with t is the identity
    CHECK(compose(f, RationalSeries::t(10)) == f);
  }
}

TEST_CASE("composition feeds powers through the outer series") {
  RationalSeries f(4);
  f[0] = 1;
  f[1] = 1;
  f[2] = 1;  // 1 + t + t^2
  RationalSeries g(4);
  g[2] = 1;  // t^2
  const RationalSeries h = compose(f, g);
  CHECK(h[0] == 1);
  CHECK(h[2] == 1);
  CHECK(h[4] == 1);
  CHECK(h[1] == 0);
  CHECK(h[3] == 0);
}

TEST_CASE("constant term preconditions are enforced") {
  RationalSeries nonzero = RationalSeries::constant(2, 4);
  RationalSeries zero(4);
  CHECK_THROWS_AS(exp(nonzero), InvalidConstantTerm);
  CHECK_THROWS_AS(log(nonzero), InvalidConstantTerm);   // needs constant 1
  CHECK_THROWS_AS(sqrt(nonzero), InvalidConstantTerm);
  CHECK_THROWS_AS(reciprocal(zero), InvalidConstantTerm);
  CHECK_THROWS_AS(compose(nonzero, nonzero), InvalidConstantTerm);
  RationalSeries not_divisible = RationalSeries::constant(1, 4);
  CHECK_THROWS_AS(shift_down(not_divisible), InvalidConstantTerm);
}

TEST_CASE("derivative and shifts") {
  RationalSeries f(3);
  f[0] = 5;
  f[1] = 3;
  f[2] = Rational(1, 2);
  f[3] = 7;
  const RationalSeries df = derivative(f);
  CHECK(df.order() == 2);
  CHECK(df[0] == 3);
  CHECK(df[1] == 1);
  CHECK(df[2] == 21);
  const RationalSeries up = shift_up(f, 2);
  CHECK(up[2] == 5);
  CHECK(up[3] == 3);
  CHECK(shift_down(up, 2)[0] == 5);
}
