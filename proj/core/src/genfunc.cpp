#include "updown/genfunc.hpp"

#include <stdexcept>

#include "updown/errors.hpp"

namespace updown {

RationalSeries object_gf(const UpdownTable& table, std::size_t order) {
  if (order > table.max_rank()) {
    throw OrderExceedsTable("object_gf order " + std::to_string(order) +
                            " exceeds max_rank " + std::to_string(table.max_rank()));
  }
  RationalSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    for (const auto& rec : table.rank(n)) {
      out[n] += Rational(1, rec.aut_order);
    }
  }
  return out;
}

RationalSeries morphism_gf(const UpdownTable& table, std::size_t order) {
  if ((order + 1) / 2 > table.max_rank()) {
    throw OrderExceedsTable("morphism_gf order " + std::to_string(order) +
                            " needs covering data through rank " +
                            std::to_string((order + 1) / 2) + ", table has max_rank " +
                            std::to_string(table.max_rank()));
  }
  RationalSeries by_u(order);
  RationalSeries by_d(order);
  for (std::size_t n = 0; 2 * n + 1 <= order; ++n) {
    for (const auto& rec : table.rank(n)) {
      for (const auto& e : table.covers(rec.id)) {
        by_u[2 * n + 1] += Rational(e.u, table.aut(e.src));
        by_d[2 * n + 1] += Rational(e.d, table.aut(e.dst));
      }
    }
  }
  if (!(by_u == by_d)) {
    throw std::logic_error("morphism_gf: u-weighted and d-weighted forms disagree");
  }
  return by_u;
}

namespace {

RationalSeries one(std::size_t order) { return RationalSeries::constant(1, order); }

// 1 - a*t^k
RationalSeries one_minus(std::size_t order, const Rational& a, std::size_t k) {
  RationalSeries s = one(order);
  if (k <= order) s[k] = -a;
  return s;
}

GeneratingPair reference_impl(Family family, std::uint64_t param, std::size_t order) {
  // Internal headroom for divisions by t.
  const std::size_t n = order + 2;
  switch (family) {
    case Family::subsets: {
      RationalSeries obj = pow(add(one(n), RationalSeries::t(n)), param);
      RationalSeries mor =
          scale(param, shift_up(pow(one_minus(n, -1, 2), param - 1)));
      return {truncate(obj, order), truncate(mor, order)};
    }
    case Family::monomials: {
      RationalSeries obj = exp(scale(param, RationalSeries::t(n)));
      RationalSeries mor = scale(param, shift_up(exp(scale(param, shift_up(RationalSeries::t(n))))));
      return {truncate(obj, order), truncate(mor, order)};
    }
    case Family::graphs: {
      RationalSeries obj(order);
      RationalSeries mor(order);
      for (std::size_t k = 0; k <= order; ++k) {
        obj[k] = Rational(Int(1) << (k * (k - 1) / 2), factorial(k));
      }
      for (std::size_t k = 1; 2 * k - 1 <= order; ++k) {
        mor[2 * k - 1] = Rational(Int(1) << (k * (k - 1) / 2), factorial(k - 1));
      }
      return {obj, mor};
    }
    case Family::necklaces: {
      const Rational c(param);
      RationalSeries obj = sub(one(n), log(one_minus(n, c, 1)));
      RationalSeries mor = scale(c, shift_up(reciprocal(one_minus(n, c, 2))));
      return {truncate(obj, order), truncate(mor, order)};
    }
    case Family::partitions_unit: {
      RationalSeries euler = one(n);
      for (std::size_t k = 1; k <= n; ++k) euler = mul(euler, one_minus(n, 1, k));
      RationalSeries obj = reciprocal(euler);
      RationalSeries obj_t2 = compose(obj, shift_up(RationalSeries::t(n)));
      RationalSeries mor = shift_up(mul(reciprocal(one_minus(n, 1, 2)), obj_t2));
      return {truncate(obj, order), truncate(mor, order)};
    }
    case Family::partitions_kingman: {
      RationalSeries geom = shift_up(reciprocal(one_minus(n, 1, 1)));  // t/(1-t)
      RationalSeries obj = exp(geom);
      RationalSeries geom2 = shift_up(reciprocal(one_minus(n, 1, 2)), 2);  // t^2/(1-t^2)
      RationalSeries mor = mul(shift_up(reciprocal(one_minus(n, 1, 2))), exp(geom2));
      return {truncate(obj, order), truncate(mor, order)};
    }
    case Family::compositions: {
      RationalSeries obj = mul(one_minus(n, 1, 1), reciprocal(one_minus(n, 2, 1)));
      RationalSeries inv = reciprocal(one_minus(n, 2, 2));
      RationalSeries mor = mul(shift_up(one_minus(n, 1, 2)), mul(inv, inv));
      return {truncate(obj, order), truncate(mor, order)};
    }
    case Family::planar_trees: {
      RationalSeries root = sqrt(one_minus(n, 4, 1));
      RationalSeries obj = shift_down(scale(Rational(1, 2), sub(one(n), root)));
      RationalSeries root2 = sqrt(one_minus(n, 4, 2));
      RationalSeries mor =
          mul(shift_down(scale(Rational(1, 2), sub(one(n), root2))), reciprocal(root2));
      return {truncate(obj, order), truncate(mor, order)};
    }
    case Family::rooted_trees: {
      RationalSeries obj(order);
      RationalSeries mor(order);
      for (std::size_t k = 0; k <= order; ++k) {
        Int p = 1;
        for (std::size_t i = 0; i < k; ++i) p *= k + 1;
        obj[k] = Rational(p, factorial(k + 1));
        if (2 * k + 1 <= order) mor[2 * k + 1] = Rational(p, factorial(k));
      }
      return {obj, mor};
    }
    case Family::binary_trees: {
      RationalSeries obj = shift_down(sub(one(n), sqrt(one_minus(n, 2, 1))));
      RationalSeries mor = shift_up(reciprocal(sqrt(one_minus(n, 2, 2))));
      return {truncate(obj, order), truncate(mor, order)};
    }
    case Family::base_s: {
      RationalSeries obj = exp(RationalSeries::t(n));
      RationalSeries mor = shift_up(exp(shift_up(RationalSeries::t(n))));
      return {truncate(obj, order), truncate(mor, order)};
    }
  }
  throw UnknownFamily("bad family enum value");
}

}  // namespace

GeneratingPair reference_gf(Family family, std::uint64_t param, std::size_t order) {
  if (family_has_param(family) && param == 0) {
    throw UnknownFamily(std::string(family_name(family)) + " requires a positive parameter");
  }
  return reference_impl(family, param, order);
}

}  // namespace updown
