#include "updown/classify.hpp"

#include <cstdint>

#include "updown/rational.hpp"

namespace updown {

namespace {

// u(p;q) <= 1 for all pairs, checked by a forward sweep from every source
// with early exit as soon as any accumulated multiplicity reaches 2.
bool has_unique_strings(const UpdownTable& table) {
  for (std::size_t r = 0; r <= table.max_rank(); ++r) {
    for (std::size_t i = 0; i < table.rank_size(r); ++i) {
      std::vector<Int> current(table.rank_size(r), 0);
      current[i] = 1;
      for (std::size_t rr = r; rr < table.max_rank(); ++rr) {
        std::vector<Int> next(table.rank_size(rr + 1), 0);
        for (std::size_t j = 0; j < current.size(); ++j) {
          if (current[j] == 0) continue;
          for (const auto& e : table.covers({rr, j})) {
            next[e.dst.index] += current[j] * e.u;
            if (next[e.dst.index] > 1) return false;
          }
        }
        current = std::move(next);
      }
    }
  }
  return true;
}

}  // namespace

ClassificationFlags classify(const UpdownTable& table) {
  ClassificationFlags flags;

  flags.univalent = true;
  bool all_hom_one = true;
  for (std::size_t r = 0; r <= table.max_rank(); ++r) {
    for (const auto& rec : table.rank(r)) {
      if (rec.aut_order != 1) flags.univalent = false;
      for (const auto& e : table.covers(rec.id)) {
        if (e.hom_size != 1) all_hom_one = false;
      }
    }
  }
  flags.unital = flags.univalent && all_hom_one;
  flags.simple = flags.univalent && has_unique_strings(table);

  flags.evenly_up = true;
  if (table.max_rank() > 0) flags.up_seq.resize(table.max_rank());
  for (std::size_t r = 0; r < table.max_rank(); ++r) {
    std::optional<std::uint64_t> common;
    for (const auto& rec : table.rank(r)) {
      std::uint64_t sum = 0;
      for (const auto& e : table.covers(rec.id)) sum += e.u;
      if (!common) {
        common = sum;
      } else if (*common != sum) {
        flags.evenly_up = false;
      }
    }
    flags.up_seq[r] = common;  // nullopt when the rank has no objects
  }

  flags.evenly_down = true;
  if (table.max_rank() > 0) flags.down_seq.resize(table.max_rank());
  for (std::size_t r = 1; r <= table.max_rank(); ++r) {
    std::optional<std::uint64_t> common;
    for (const auto& rec : table.rank(r)) {
      std::uint64_t sum = 0;
      for (const auto& e : table.covered_by(rec.id)) sum += e.d;
      if (!common) {
        common = sum;
      } else if (*common != sum) {
        flags.evenly_down = false;
      }
    }
    flags.down_seq[r - 1] = common;
  }

  flags.factorial = flags.evenly_down;
  for (std::size_t r = 1; r <= table.max_rank() && flags.factorial; ++r) {
    const auto& d = flags.down_seq[r - 1];
    if (d && *d != r) flags.factorial = false;
  }
  return flags;
}

}  // namespace updown
