#include "updown/ext_mult.hpp"

#include "updown/errors.hpp"

namespace updown {

namespace {

enum class Weight { up, down };

std::vector<std::vector<Int>> sweep(const UpdownTable& table, ObjectId p,
                                    std::size_t up_to_rank, Weight weight) {
  table.object(p);  // bounds check
  if (up_to_rank > table.max_rank()) {
    throw OrderExceedsTable("rank " + std::to_string(up_to_rank) + " exceeds max_rank " +
                            std::to_string(table.max_rank()));
  }
  std::vector<std::vector<Int>> result(up_to_rank + 1);
  if (p.rank > up_to_rank) return result;
  for (std::size_t r = p.rank; r <= up_to_rank; ++r) {
    result[r].assign(table.rank_size(r), Int(0));
  }
  result[p.rank][p.index] = 1;
  for (std::size_t r = p.rank; r < up_to_rank; ++r) {
    for (std::size_t i = 0; i < result[r].size(); ++i) {
      const Int& acc = result[r][i];
      if (acc == 0) continue;
      for (const auto& e : table.covers({r, i})) {
        result[r + 1][e.dst.index] += acc * (weight == Weight::up ? e.u : e.d);
      }
    }
  }
  return result;
}

}  // namespace

std::vector<std::vector<Int>> u_ext_from(const UpdownTable& table, ObjectId p,
                                         std::size_t up_to_rank) {
  return sweep(table, p, up_to_rank, Weight::up);
}

std::vector<std::vector<Int>> d_ext_from(const UpdownTable& table, ObjectId p,
                                         std::size_t up_to_rank) {
  return sweep(table, p, up_to_rank, Weight::down);
}

ExtMult ext_mult(const UpdownTable& table, ObjectId p, ObjectId q) {
  table.object(p);
  table.object(q);
  if (p.rank > q.rank) {
    throw RankOrderError("ext_mult requires |p| <= |q|, got " + to_string(p) + " and " +
                         to_string(q));
  }
  if (p.rank == q.rank) {
    return p == q ? ExtMult{1, 1} : ExtMult{0, 0};
  }
  auto u_table = u_ext_from(table, p, q.rank);
  auto d_table = d_ext_from(table, p, q.rank);
  return ExtMult{u_table[q.rank][q.index], d_table[q.rank][q.index]};
}

}  // namespace updown
