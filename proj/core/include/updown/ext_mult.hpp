#pragma once

#include <cstddef>
#include <vector>

#include "updown/rational.hpp"
#include "updown/table.hpp"

namespace updown {

struct ExtMult {
  Int u;
  Int d;
};

/// Extended multiplicities u(p;q), d(p;q) for |p| <= |q|, computed by dynamic
/// programming over intermediate ranks (sum over saturated chains of the
/// products of edge multiplicities).  u(p;p) = d(p;p) = 1; (0,0) when no
/// chain joins p to q.  The result always satisfies
/// u * aut(q) = d * aut(p).
///
/// Throws RankOrderError when |p| > |q|.
ExtMult ext_mult(const UpdownTable& table, ObjectId p, ObjectId q);

/// One forward sweep: u_ext(p; x) for every x with |p| <= |x| <= up_to_rank.
/// Entry [r][i] is u(p; (r,i)); ranks below |p| are empty vectors.
std::vector<std::vector<Int>> u_ext_from(const UpdownTable& table, ObjectId p,
                                         std::size_t up_to_rank);

/// Dual sweep with d-weights.
std::vector<std::vector<Int>> d_ext_from(const UpdownTable& table, ObjectId p,
                                         std::size_t up_to_rank);

}  // namespace updown
