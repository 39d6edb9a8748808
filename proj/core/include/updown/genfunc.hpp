#pragma once

#include <cstddef>

#include "updown/family.hpp"
#include "updown/series.hpp"
#include "updown/table.hpp"

namespace updown {

/// Object generating function: coefficient of t^n is the sum of 1/|Aut p|
/// over rank-n objects.  Requires order <= max_rank (OrderExceedsTable).
RationalSeries object_gf(const UpdownTable& table, std::size_t order);

/// Morphism generating function: coefficient of t^(2n+1) is the sum of
/// u(p;q)/|Aut p| over covering pairs with |p| = n; even coefficients are
/// zero.  Requires covering data through rank ceil(order/2), i.e.
/// order <= 2*max_rank - 1.  The d-weighted form (sum of d(p;q)/|Aut q|) is
/// always computed as well and must agree exactly.
RationalSeries morphism_gf(const UpdownTable& table, std::size_t order);

struct GeneratingPair {
  RationalSeries object;
  RationalSeries morphism;
};

/// Expands the closed-form object and morphism series of a builtin family.
/// param is the family parameter (n or c) where one applies.
GeneratingPair reference_gf(Family family, std::uint64_t param, std::size_t order);

}  // namespace updown
