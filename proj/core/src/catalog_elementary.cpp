#include <map>
#include <set>

#include "catalog_detail.hpp"
#include "updown/catalog.hpp"
#include "updown/constructions.hpp"
#include "updown/errors.hpp"
#include "updown/rational.hpp"

namespace updown::catalog {

namespace {

using namespace detail;

void check_rank_budget(const FamilySpec& spec) {
  if (spec.max_rank > family_rank_cap(spec.family)) {
    throw BudgetExceeded(std::string(family_name(spec.family)) + " is capped at rank " +
                         std::to_string(family_rank_cap(spec.family)) + ", requested " +
                         std::to_string(spec.max_rank));
  }
}

void check_param(const FamilySpec& spec, std::uint64_t lo, std::uint64_t hi) {
  if (spec.param < lo) {
    throw TableSpecError(std::string(family_name(spec.family)) +
                         " requires a positive parameter");
  }
  if (spec.param > hi) {
    throw BudgetExceeded(std::string(family_name(spec.family)) + " parameter is capped at " +
                         std::to_string(hi));
  }
}

/// The two-object segment category: one rank-0 and one rank-1 object joined
/// by a singleton hom-set; ranks above 1 stay empty so products can extend
/// to any rank.
UpdownTable make_segment(std::size_t max_rank) {
  std::vector<std::vector<ObjectSpec>> ranks(max_rank + 1);
  ranks[0].push_back(ObjectSpec{"0", 1});
  std::vector<EdgeSpec> edges;
  if (max_rank >= 1) {
    ranks[1].push_back(ObjectSpec{"1", 1});
    edges.push_back(EdgeSpec{{0, 0}, {1, 0}, 1});
  }
  return build_table("segment", std::move(ranks), edges);
}

UpdownTable make_base_s(std::size_t max_rank) {
  std::vector<std::vector<ObjectSpec>> ranks(max_rank + 1);
  std::vector<EdgeSpec> edges;
  std::uint64_t fact = 1;
  for (std::size_t m = 0; m <= max_rank; ++m) {
    fact *= std::max<std::size_t>(m, 1);  // m!
    ranks[m].push_back(ObjectSpec{"[" + std::to_string(m) + "]", fact});
    if (m < max_rank) {
      std::uint64_t hom = fact * (m + 1);  // (m+1)! injections
      edges.push_back(EdgeSpec{{m, 0}, {m + 1, 0}, hom});
    }
  }
  return build_table("base-s", std::move(ranks), edges);
}

std::string subset_label(const std::string& nested) {
  std::string out = "{";
  std::size_t element = 0;
  bool first = true;
  for (char ch : nested) {
    if (ch == '0' || ch == '1') {
      ++element;
      if (ch == '1') {
        if (!first) out += ',';
        out += std::to_string(element);
        first = false;
      }
    }
  }
  out += '}';
  return out;
}

std::string monomial_label(const std::string& nested) {
  // Collect the bracketed exponents of the factor labels in order.
  std::vector<std::uint64_t> exponents;
  std::uint64_t current = 0;
  bool in_number = false;
  for (char ch : nested) {
    if (ch >= '0' && ch <= '9') {
      current = current * 10 + (ch - '0');
      in_number = true;
    } else if (in_number) {
      exponents.push_back(current);
      current = 0;
      in_number = false;
    }
  }
  std::string out = "[";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exponents[i]);
  }
  out += ']';
  return out;
}

UpdownTable relabel_by(const UpdownTable& table,
                       const std::function<std::string(const std::string&)>& fn,
                       const std::string& name) {
  std::vector<std::vector<std::string>> labels(table.max_rank() + 1);
  for (std::size_t r = 0; r <= table.max_rank(); ++r) {
    for (const auto& rec : table.rank(r)) labels[r].push_back(fn(rec.label));
  }
  return relabel(table, labels, name);
}

UpdownTable gen_subsets(const FamilySpec& spec) {
  check_param(spec, 1, 16);
  UpdownTable power = make_segment(spec.max_rank);
  for (std::uint64_t i = 1; i < spec.param; ++i) {
    power = product(power, make_segment(spec.max_rank));
  }
  return relabel_by(power, subset_label, spec_display(spec));
}

UpdownTable gen_monomials(const FamilySpec& spec) {
  check_param(spec, 1, 8);
  UpdownTable power = make_base_s(spec.max_rank);
  for (std::uint64_t i = 1; i < spec.param; ++i) {
    power = product(power, make_base_s(spec.max_rank));
  }
  return relabel_by(power, monomial_label, spec_display(spec));
}

std::uint64_t multiplicity_aut(const std::vector<std::uint64_t>& partition) {
  std::uint64_t aut = 1;
  std::size_t i = 0;
  while (i < partition.size()) {
    std::size_t j = i;
    while (j < partition.size() && partition[j] == partition[i]) ++j;
    for (std::size_t m = 2; m <= j - i; ++m) aut *= m;
    i = j;
  }
  return aut;
}

std::uint64_t part_multiplicity(const std::vector<std::uint64_t>& partition,
                                std::uint64_t value) {
  std::uint64_t count = 0;
  for (auto part : partition) count += part == value;
  return count;
}

/// Partitions covered by growth: increment a part where the sequence stays
/// decreasing (one spot per distinct part size), or append a new part 1.
std::vector<std::vector<std::uint64_t>> partition_covers(
    const std::vector<std::uint64_t>& partition) {
  std::vector<std::vector<std::uint64_t>> covers;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i == 0 || partition[i - 1] > partition[i]) {
      auto next = partition;
      ++next[i];
      covers.push_back(std::move(next));
    }
  }
  auto appended = partition;
  appended.push_back(1);
  covers.push_back(std::move(appended));
  return covers;
}

UpdownTable gen_partitions(const FamilySpec& spec, bool kingman) {
  std::vector<std::vector<ObjectSpec>> ranks(spec.max_rank + 1);
  std::vector<std::map<std::string, std::size_t>> index(spec.max_rank + 1);
  std::vector<std::vector<std::vector<std::uint64_t>>> parts(spec.max_rank + 1);
  for (std::size_t n = 0; n <= spec.max_rank; ++n) {
    auto all = partitions_of(n);
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return format_tuple(a) < format_tuple(b); });
    for (auto& partition : all) {
      const std::string label = format_tuple(partition);
      index[n][label] = ranks[n].size();
      ranks[n].push_back(ObjectSpec{label, kingman ? multiplicity_aut(partition) : 1});
      parts[n].push_back(std::move(partition));
    }
  }

  std::vector<EdgeSpec> edges;
  for (std::size_t n = 0; n < spec.max_rank; ++n) {
    for (std::size_t i = 0; i < parts[n].size(); ++i) {
      const auto& lambda = parts[n][i];
      for (const auto& mu : partition_covers(lambda)) {
        const std::size_t j = index[n + 1].at(format_tuple(mu));
        std::uint64_t hom = 1;
        if (kingman) {
          // Appending a part 1 has one up-orbit; bumping a size-k part has
          // m_k(lambda) of them.
          std::uint64_t u = 1;
          if (mu.size() == lambda.size()) {
            std::size_t pos = 0;
            while (mu[pos] == lambda[pos]) ++pos;
            u = part_multiplicity(lambda, lambda[pos]);
          }
          hom = u * multiplicity_aut(mu);
        }
        edges.push_back(EdgeSpec{{n, i}, {n + 1, j}, hom});
      }
    }
  }
  return build_table(spec_display(spec), std::move(ranks), edges);
}

UpdownTable gen_compositions(const FamilySpec& spec) {
  std::vector<std::vector<ObjectSpec>> ranks(spec.max_rank + 1);
  std::vector<std::map<std::string, std::size_t>> index(spec.max_rank + 1);
  std::vector<std::vector<std::vector<std::uint64_t>>> tuples(spec.max_rank + 1);
  for (std::size_t n = 0; n <= spec.max_rank; ++n) {
    auto all = compositions_of(n);
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return format_tuple(a) < format_tuple(b); });
    for (auto& tuple : all) {
      const std::string label = format_tuple(tuple);
      index[n][label] = ranks[n].size();
      ranks[n].push_back(ObjectSpec{label, 1});
      tuples[n].push_back(std::move(tuple));
    }
  }

  std::vector<EdgeSpec> edges;
  for (std::size_t n = 0; n < spec.max_rank; ++n) {
    for (std::size_t i = 0; i < tuples[n].size(); ++i) {
      const auto& comp = tuples[n][i];
      std::set<std::string> targets;
      for (std::size_t pos = 0; pos < comp.size(); ++pos) {
        auto bumped = comp;
        ++bumped[pos];
        targets.insert(format_tuple(bumped));
      }
      for (std::size_t pos = 0; pos <= comp.size(); ++pos) {
        auto inserted = comp;
        inserted.insert(inserted.begin() + pos, 1);
        targets.insert(format_tuple(inserted));
      }
      const std::string label = format_tuple(comp);
      for (const auto& target : targets) {
        edges.push_back(EdgeSpec{{n, i},
                                 {n + 1, index[n + 1].at(target)},
                                 hom_oracle(Family::compositions, label, target)});
      }
    }
  }
  return build_table(spec_display(spec), std::move(ranks), edges);
}

UpdownTable gen_necklaces(const FamilySpec& spec) {
  check_param(spec, 1, 9);
  const std::uint64_t colors = spec.param;
  std::vector<std::vector<std::string>> levels(spec.max_rank + 1);
  std::vector<std::map<std::string, std::size_t>> index(spec.max_rank + 1);
  levels[0] = {""};
  index[0][""] = 0;
  for (std::size_t m = 0; m < spec.max_rank; ++m) {
    std::set<std::string> next;
    for (const auto& beads : levels[m]) {
      for (std::size_t pos = 0; pos <= beads.size(); ++pos) {
        for (std::uint64_t color = 1; color <= colors; ++color) {
          std::string grown = beads;
          grown.insert(grown.begin() + pos, static_cast<char>('0' + color));
          next.insert(necklace_canon(grown));
        }
      }
    }
    levels[m + 1].assign(next.begin(), next.end());
    for (std::size_t i = 0; i < levels[m + 1].size(); ++i) index[m + 1][levels[m + 1][i]] = i;
  }

  std::vector<std::vector<ObjectSpec>> ranks(spec.max_rank + 1);
  std::vector<EdgeSpec> edges;
  for (std::size_t m = 0; m <= spec.max_rank; ++m) {
    for (const auto& beads : levels[m]) {
      ranks[m].push_back(ObjectSpec{beads, necklace_aut(beads)});
    }
  }
  for (std::size_t m = 0; m < spec.max_rank; ++m) {
    for (std::size_t i = 0; i < levels[m].size(); ++i) {
      const auto& beads = levels[m][i];
      std::set<std::string> targets;
      for (std::size_t pos = 0; pos <= beads.size(); ++pos) {
        for (std::uint64_t color = 1; color <= colors; ++color) {
          std::string grown = beads;
          grown.insert(grown.begin() + pos, static_cast<char>('0' + color));
          targets.insert(necklace_canon(grown));
        }
      }
      for (const auto& target : targets) {
        edges.push_back(EdgeSpec{{m, i},
                                 {m + 1, index[m + 1].at(target)},
                                 hom_oracle(Family::necklaces, beads, target)});
      }
    }
  }
  return build_table(spec_display(spec), std::move(ranks), edges);
}

UpdownTable gen_planar_trees(const FamilySpec& spec) {
  std::vector<std::vector<ObjectSpec>> ranks(spec.max_rank + 1);
  std::vector<std::map<std::string, std::size_t>> index(spec.max_rank + 1);
  std::vector<std::vector<std::string>> words(spec.max_rank + 1);
  for (std::size_t n = 0; n <= spec.max_rank; ++n) {
    words[n] = dyck_words(n);
    for (const auto& word : words[n]) {
      index[n][word] = ranks[n].size();
      ranks[n].push_back(ObjectSpec{word, 1});
    }
  }

  std::vector<EdgeSpec> edges;
  for (std::size_t n = 0; n < spec.max_rank; ++n) {
    for (std::size_t i = 0; i < words[n].size(); ++i) {
      const auto& word = words[n][i];
      std::set<std::string> targets;
      for (std::size_t gap = 0; gap <= word.size(); ++gap) {
        targets.insert(word.substr(0, gap) + "+-" + word.substr(gap));
      }
      for (const auto& target : targets) {
        edges.push_back(EdgeSpec{{n, i},
                                 {n + 1, index[n + 1].at(target)},
                                 hom_oracle(Family::planar_trees, word, target)});
      }
    }
  }
  return build_table(spec_display(spec), std::move(ranks), edges);
}

}  // namespace

UpdownTable gen_elementary(const FamilySpec& spec) {
  check_rank_budget(spec);
  switch (spec.family) {
    case Family::subsets: return gen_subsets(spec);
    case Family::monomials: return gen_monomials(spec);
    case Family::base_s: return make_base_s(spec.max_rank);
    case Family::partitions_unit: return gen_partitions(spec, false);
    case Family::partitions_kingman: return gen_partitions(spec, true);
    case Family::compositions: return gen_compositions(spec);
    case Family::necklaces: return gen_necklaces(spec);
    case Family::planar_trees: return gen_planar_trees(spec);
    default:
      throw UnsupportedFamily(std::string(family_name(spec.family)) +
                              " is generated by iso-class enumeration");
  }
}

UpdownTable make_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::graphs:
    case Family::rooted_trees:
    case Family::binary_trees:
      return gen_isoclass(spec);
    default:
      return gen_elementary(spec);
  }
}

}  // namespace updown::catalog
