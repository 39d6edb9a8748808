#include "updown/constructions.hpp"

#include <algorithm>
#include <limits>

#include "updown/classify.hpp"
#include "updown/errors.hpp"

namespace updown {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw TableSpecError("hom size overflows 64 bits in product construction");
  }
  return out;
}

}  // namespace

UpdownTable product(const UpdownTable& c, const UpdownTable& d) {
  const std::size_t max_rank = std::min(c.max_rank(), d.max_rank());

  // Pair objects, ranked by total rank, ordered by (first rank, first index,
  // second index).  index_of[n][a][i][j] locates ((a,i),(n-a,j)).
  std::vector<std::vector<ObjectSpec>> rank_specs(max_rank + 1);
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> index_of(max_rank + 1);
  for (std::size_t n = 0; n <= max_rank; ++n) {
    index_of[n].resize(n + 1);
    for (std::size_t a = 0; a <= n; ++a) {
      const std::size_t b = n - a;
      index_of[n][a].resize(c.rank_size(a), std::vector<std::size_t>(d.rank_size(b)));
      for (std::size_t i = 0; i < c.rank_size(a); ++i) {
        for (std::size_t j = 0; j < d.rank_size(b); ++j) {
          index_of[n][a][i][j] = rank_specs[n].size();
          const auto& x = c.rank(a)[i];
          const auto& y = d.rank(b)[j];
          rank_specs[n].push_back(ObjectSpec{"(" + x.label + "|" + y.label + ")",
                                             checked_mul(x.aut_order, y.aut_order)});
        }
      }
    }
  }

  std::vector<EdgeSpec> edges;
  for (std::size_t n = 0; n < max_rank; ++n) {
    for (std::size_t a = 0; a <= n; ++a) {
      const std::size_t b = n - a;
      for (std::size_t i = 0; i < c.rank_size(a); ++i) {
        for (std::size_t j = 0; j < d.rank_size(b); ++j) {
          const ObjectId src{n, index_of[n][a][i][j]};
          for (const auto& e : c.covers({a, i})) {
            const ObjectId dst{n + 1, index_of[n + 1][a + 1][e.dst.index][j]};
            edges.push_back(EdgeSpec{src, dst, checked_mul(e.hom_size, d.aut({b, j}))});
          }
          for (const auto& e : d.covers({b, j})) {
            const ObjectId dst{n + 1, index_of[n + 1][a][i][e.dst.index]};
            edges.push_back(EdgeSpec{src, dst, checked_mul(c.aut({a, i}), e.hom_size)});
          }
        }
      }
    }
  }
  return build_table(c.name() + " x " + d.name(), std::move(rank_specs), edges);
}

namespace {

enum class QuotientSide { up, down };

UpdownTable quotient(const UpdownTable& table, QuotientSide side) {
  std::vector<std::vector<ObjectSpec>> rank_specs(table.max_rank() + 1);
  std::vector<EdgeSpec> edges;
  for (std::size_t r = 0; r <= table.max_rank(); ++r) {
    for (const auto& rec : table.rank(r)) {
      rank_specs[r].push_back(ObjectSpec{rec.label, 1});
      for (const auto& e : table.covers(rec.id)) {
        edges.push_back(EdgeSpec{e.src, e.dst, side == QuotientSide::up ? e.u : e.d});
      }
    }
  }
  return build_table(table.name() + (side == QuotientSide::up ? "^up" : "^dn"),
                     std::move(rank_specs), edges);
}

}  // namespace

UpdownTable up_quotient(const UpdownTable& table) { return quotient(table, QuotientSide::up); }

UpdownTable dn_quotient(const UpdownTable& table) { return quotient(table, QuotientSide::down); }

WeightedPoset wrp_export(const UpdownTable& table) {
  WeightedPoset poset;
  poset.name = table.name();
  poset.objects.resize(table.max_rank() + 1);
  for (std::size_t r = 0; r <= table.max_rank(); ++r) {
    for (const auto& rec : table.rank(r)) {
      if (rec.aut_order != 1) {
        throw NotUnivalent("wrp export requires a univalent table; object " +
                           to_string(rec.id) + " has aut order " +
                           std::to_string(rec.aut_order));
      }
      poset.objects[r].push_back(rec.label);
      for (const auto& e : table.covers(rec.id)) {
        poset.covers.push_back(WeightedCover{e.src, e.dst, e.hom_size});
      }
    }
  }
  return poset;
}

RankBijection unique_iso(const UpdownTable& c, const UpdownTable& d) {
  const std::size_t top = std::min(c.max_rank(), d.max_rank());
  const ClassificationFlags fc = classify(c);
  const ClassificationFlags fd = classify(d);
  if (!fc.simple || !fd.simple) {
    throw PreconditionFailed("unique_iso requires simple tables");
  }
  if (!fc.evenly_up || !fd.evenly_up) {
    throw PreconditionFailed("unique_iso requires evenly up-covered tables");
  }
  for (std::size_t r = 0; r < top; ++r) {
    if (fc.up_seq[r] != fd.up_seq[r]) {
      throw PreconditionFailed("unique_iso: u-sequences differ at rank " + std::to_string(r));
    }
  }
  if (c.rank_size(0) != 1 || d.rank_size(0) != 1) {
    throw PreconditionFailed("unique_iso requires a unique rank-0 object");
  }

  RankBijection bijection;
  bijection.forward.resize(top + 1);
  bijection.forward[0] = {0};
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();

  auto sorted_up_set = [](const UpdownTable& t, ObjectId p) {
    std::vector<std::size_t> up;
    for (const auto& e : t.covers(p)) up.push_back(e.dst.index);
    std::sort(up.begin(), up.end(), [&](std::size_t x, std::size_t y) {
      const auto& lx = t.rank(p.rank + 1)[x].label;
      const auto& ly = t.rank(p.rank + 1)[y].label;
      return lx != ly ? lx < ly : x < y;
    });
    return up;
  };

  for (std::size_t r = 0; r < top; ++r) {
    if (c.rank_size(r + 1) != d.rank_size(r + 1)) {
      throw PreconditionFailed("unique_iso: rank " + std::to_string(r + 1) +
                               " sizes differ");
    }
    bijection.forward[r + 1].assign(c.rank_size(r + 1), unset);
    for (std::size_t i = 0; i < c.rank_size(r); ++i) {
      auto up_c = sorted_up_set(c, {r, i});
      auto up_d = sorted_up_set(d, {r, bijection.forward[r][i]});
      if (up_c.size() != up_d.size()) {
        throw PreconditionFailed("unique_iso: up-set sizes differ at rank " +
                                 std::to_string(r));
      }
      for (std::size_t k = 0; k < up_c.size(); ++k) {
        if (bijection.forward[r + 1][up_c[k]] != unset) {
          throw PreconditionFailed("unique_iso: object covered twice, table not simple");
        }
        bijection.forward[r + 1][up_c[k]] = up_d[k];
      }
    }
    for (std::size_t i = 0; i < c.rank_size(r + 1); ++i) {
      if (bijection.forward[r + 1][i] == unset) {
        throw PreconditionFailed("unique_iso: unreachable object at rank " +
                                 std::to_string(r + 1));
      }
    }
  }
  return bijection;
}

}  // namespace updown
