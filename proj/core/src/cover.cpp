#include "updown/constructions.hpp"

#include <string>

#include "updown/errors.hpp"

namespace updown {

ObjectId CoverTable::projection(ObjectId cover_id) const {
  if (cover_id.rank >= projection_.size() ||
      cover_id.index >= projection_[cover_id.rank].size()) {
    throw RankOutOfRange("no cover object " + to_string(cover_id));
  }
  return projection_[cover_id.rank][cover_id.index];
}

CoverPath CoverTable::path(ObjectId cover_id) const {
  projection(cover_id);  // bounds check
  CoverPath path;
  path.steps.resize(cover_id.rank);
  std::size_t index = cover_id.index;
  for (std::size_t r = cover_id.rank; r > 0; --r) {
    path.steps[r - 1] =
        CoverPathStep{projection_[r][index], step_index_[r][index]};
    index = parent_[r][index];
  }
  return path;
}

std::uint64_t CoverTable::fiber(ObjectId base_id) const {
  if (base_id.rank >= fiber_.size()) {
    throw RankOutOfRange("rank " + std::to_string(base_id.rank) +
                         " exceeds the built cover depth " +
                         std::to_string(depth()));
  }
  return fiber_[base_id.rank].at(base_id.index);
}

std::uint64_t fiber_count(const CoverTable& cover, ObjectId base_id) {
  return cover.fiber(base_id);
}

/*
  Breadth-first unfolding.  A rank-n object is a chain of n covering
  morphisms from the root; its children enumerate, for every outgoing base
  edge of its projection, the hom_size many one-step extensions.  Children
  are ordered by (parent order, edge order, morphism index), which makes the
  construction deterministic; parallelizing over parents would have to merge
  in exactly this order.
*/
CoverTable universal_cover(const UpdownTable& table, std::size_t up_to_rank,
                           std::uint64_t budget) {
  if (up_to_rank > table.max_rank()) {
    throw OrderExceedsTable("cover depth " + std::to_string(up_to_rank) +
                            " exceeds max_rank " + std::to_string(table.max_rank()));
  }
  for (std::size_t r = 0; r <= up_to_rank; ++r) {
    for (const auto& rec : table.rank(r)) {
      if (rec.aut_order != 1) {
        throw NotUnivalent("universal cover requires a univalent table; object " +
                           to_string(rec.id) + " has aut order " +
                           std::to_string(rec.aut_order));
      }
    }
  }

  CoverTable cover;
  cover.projection_.resize(up_to_rank + 1);
  cover.parent_.resize(up_to_rank + 1);
  cover.step_index_.resize(up_to_rank + 1);
  cover.fiber_.resize(up_to_rank + 1);
  for (std::size_t r = 0; r <= up_to_rank; ++r) {
    cover.fiber_[r].assign(table.rank_size(r), 0);
  }
  if (table.rank_size(0) != 1) {
    throw PreconditionFailed("universal cover requires a unique rank-0 object");
  }

  std::uint64_t total = 1;
  cover.projection_[0] = {ObjectId{0, 0}};
  cover.parent_[0] = {0};
  cover.step_index_[0] = {0};
  cover.fiber_[0][0] = 1;

  for (std::size_t r = 0; r < up_to_rank; ++r) {
    auto& next_proj = cover.projection_[r + 1];
    auto& next_parent = cover.parent_[r + 1];
    auto& next_step = cover.step_index_[r + 1];
    for (std::size_t i = 0; i < cover.projection_[r].size(); ++i) {
      const ObjectId base = cover.projection_[r][i];
      for (const auto& e : table.covers(base)) {
        for (std::uint64_t m = 1; m <= e.hom_size; ++m) {
          if (total == budget) {
            throw BudgetExceeded("cover object budget of " + std::to_string(budget) +
                                 " exhausted at rank " + std::to_string(r + 1));
          }
          ++total;
          next_proj.push_back(e.dst);
          next_parent.push_back(i);
          next_step.push_back(m);
          ++cover.fiber_[r + 1][e.dst.index];
        }
      }
    }
  }

  // Materialize the cover as a table of its own: all automorphism orders and
  // hom sizes are 1, labels mark the fiber and position within it.
  std::vector<std::vector<ObjectSpec>> rank_specs(up_to_rank + 1);
  std::vector<EdgeSpec> edges;
  std::vector<std::vector<std::uint64_t>> seen(up_to_rank + 1);
  for (std::size_t r = 0; r <= up_to_rank; ++r) {
    seen[r].assign(table.rank_size(r), 0);
    for (std::size_t i = 0; i < cover.projection_[r].size(); ++i) {
      const ObjectId base = cover.projection_[r][i];
      rank_specs[r].push_back(ObjectSpec{
          table.object(base).label + "~" + std::to_string(seen[r][base.index]++), 1});
      if (r > 0) {
        edges.push_back(EdgeSpec{{r - 1, cover.parent_[r][i]}, {r, i}, 1});
      }
    }
  }
  cover.table_ = std::make_unique<UpdownTable>(
      build_table(table.name() + "~cover", std::move(rank_specs), edges));
  return cover;
}

}  // namespace updown
