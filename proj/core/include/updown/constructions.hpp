#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "updown/rational.hpp"
#include "updown/table.hpp"

namespace updown {

/// Product category: objects are pairs with additive rank and multiplicative
/// automorphism order; an edge moves one slot along a factor edge, with
/// hom = hom_factor * aut(other slot).  The result is truncated at the
/// smaller factor max_rank, the largest rank whose slices are complete.
UpdownTable product(const UpdownTable& c, const UpdownTable& d);

/// Univalent quotient with covering hom-sets of size u(p;q): automorphisms
/// collapse, objects and labels survive.  Coincides structurally with the
/// input when it is already univalent.
UpdownTable up_quotient(const UpdownTable& table);

/// Dual quotient with hom sizes d(p;q).
UpdownTable dn_quotient(const UpdownTable& table);

struct WeightedCover {
  ObjectId src;
  ObjectId dst;
  std::uint64_t weight;
};

/// A ranked poset with multiplicative weights on covering relations.
struct WeightedPoset {
  std::string name;
  std::vector<std::vector<std::string>> objects;  // labels per rank
  std::vector<WeightedCover> covers;
};

/// Exports the induced weighted-relation poset of a univalent table:
/// n(x,y) = |Hom(x,y)| on covering pairs.  Throws NotUnivalent.
WeightedPoset wrp_export(const UpdownTable& table);

struct CoverPathStep {
  ObjectId object;               // target of the step, rank = position
  std::uint64_t morphism_index;  // 1-based position in the covering hom-set
};

/// A rank-n object of the universal cover: the decorated chain from the root.
struct CoverPath {
  std::vector<CoverPathStep> steps;
};

constexpr std::uint64_t kDefaultCoverBudget = 10'000'000;

/// The universal cover of a univalent table, built breadth first: rank-n
/// objects are decorated chains of length n from the root, and each chain is
/// covered exactly by its one-step extensions.  The result is simple, every
/// covering hom-set in it is a singleton, and the fiber over p has
/// u(0^;p) elements.
class CoverTable {
 public:
  const UpdownTable& table() const { return *table_; }
  std::size_t depth() const { return projection_.size() - 1; }
  std::size_t level_size(std::size_t rank) const { return projection_.at(rank).size(); }

  /// The base object under a cover object (the target of its last step).
  ObjectId projection(ObjectId cover_id) const;
  /// Reconstructs the decorated chain for a cover object.
  CoverPath path(ObjectId cover_id) const;

  /// Number of cover objects over base id p.  Throws RankOutOfRange when
  /// |p| exceeds the built depth.
  std::uint64_t fiber(ObjectId base_id) const;

 private:
  friend CoverTable universal_cover(const UpdownTable&, std::size_t, std::uint64_t);

  std::unique_ptr<UpdownTable> table_;
  std::vector<std::vector<ObjectId>> projection_;       // per rank, per index
  std::vector<std::vector<std::size_t>> parent_;        // index into previous rank
  std::vector<std::vector<std::uint64_t>> step_index_;  // morphism index of last step
  std::vector<std::vector<std::uint64_t>> fiber_;       // per base rank, per base index
};

/// Throws NotUnivalent, OrderExceedsTable, BudgetExceeded (when the total
/// object count would pass the budget).
CoverTable universal_cover(const UpdownTable& table, std::size_t up_to_rank,
                           std::uint64_t budget = kDefaultCoverBudget);

/// Number of cover objects projecting to p; equals ext_mult(root, p).u.
std::uint64_t fiber_count(const CoverTable& cover, ObjectId base_id);

/// A rank-preserving object bijection between two tables.
struct RankBijection {
  std::vector<std::vector<std::size_t>> forward;  // [rank][index in c] -> index in d
};

/// For two simple tables that are evenly up-covered with the same u-sequence:
/// builds a covering-relation-preserving bijection by rank induction,
/// matching the up-set of each object to the up-set of its image (both sorted
/// by label then index).  Throws PreconditionFailed otherwise.
RankBijection unique_iso(const UpdownTable& c, const UpdownTable& d);

}  // namespace updown
