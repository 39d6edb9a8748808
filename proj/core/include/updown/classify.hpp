#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "updown/table.hpp"

namespace updown {

/// Structural classification of a tabulated category.
///
/// The even-covering verdicts are truncation-aware: the up verdict only
/// quantifies over ranks below max_rank (the top rank has no outgoing data,
/// so its u-sum is unknown rather than zero), and a rank with no objects
/// constrains nothing.  Sequence entries are nullopt for such ranks.
struct ClassificationFlags {
  bool univalent = false;  // all |Aut p| = 1
  bool unital = false;     // univalent and every covering hom-set a singleton
  bool simple = false;     // univalent and u(p;q) <= 1 for all p <= q
  bool evenly_up = false;
  bool evenly_down = false;
  bool factorial = false;  // evenly down-covered with d_n = n

  /// up_seq[n] = common outgoing u-sum at rank n, for n in [0, max_rank).
  std::vector<std::optional<std::uint64_t>> up_seq;
  /// down_seq[n-1] = common incoming d-sum at rank n, for n in [1, max_rank].
  std::vector<std::optional<std::uint64_t>> down_seq;
};

ClassificationFlags classify(const UpdownTable& table);

}  // namespace updown
