#include <map>
#include <set>

#include "catalog_detail.hpp"
#include "updown/catalog.hpp"
#include "updown/errors.hpp"

namespace updown::catalog {

namespace {

using namespace detail;

/*
  Graphs are enumerated by extension: every (n+1)-vertex class arises from an
  n-vertex class by attaching a fresh vertex to some neighborhood, so one
  canonicalization sweep per candidate suffices.  Covering hom sizes come the
  other way round, by deletion: |Hom(H,G)| = aut(H) * #{v in G : G - v = H},
  since an embedding is an isomorphism onto the complement of one vertex.
*/
UpdownTable gen_graphs(const FamilySpec& spec) {
  std::vector<std::vector<std::uint32_t>> masks(spec.max_rank + 1);
  std::vector<std::map<std::uint32_t, std::size_t>> index(spec.max_rank + 1);
  masks[0] = {0};
  index[0][0] = 0;
  for (std::size_t n = 0; n < spec.max_rank; ++n) {
    std::set<std::uint32_t> next;
    for (const std::uint32_t mask : masks[n]) {
      for (std::uint32_t nbhd = 0; nbhd < (1u << n); ++nbhd) {
        std::uint32_t grown = 0;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            if (mask >> graph_pair_index(i, j, n) & 1u) {
              grown |= 1u << graph_pair_index(i, j, n + 1);
            }
          }
          if (nbhd >> i & 1u) grown |= 1u << graph_pair_index(i, n, n + 1);
        }
        next.insert(graph_canon(grown, n + 1));
      }
    }
    // Objects are ordered by label, the canonical edge list.
    std::vector<std::pair<std::string, std::uint32_t>> labeled;
    for (const std::uint32_t mask : next) labeled.emplace_back(graph_label(mask, n + 1), mask);
    std::sort(labeled.begin(), labeled.end());
    for (const auto& [label, mask] : labeled) {
      index[n + 1][mask] = masks[n + 1].size();
      masks[n + 1].push_back(mask);
    }
  }

  std::vector<std::vector<ObjectSpec>> ranks(spec.max_rank + 1);
  std::vector<std::vector<std::uint64_t>> auts(spec.max_rank + 1);
  for (std::size_t n = 0; n <= spec.max_rank; ++n) {
    for (const std::uint32_t mask : masks[n]) {
      auts[n].push_back(graph_aut(mask, n));
      ranks[n].push_back(ObjectSpec{graph_label(mask, n), auts[n].back()});
    }
  }

  std::vector<EdgeSpec> edges;
  for (std::size_t n = 1; n <= spec.max_rank; ++n) {
    for (std::size_t g = 0; g < masks[n].size(); ++g) {
      std::map<std::size_t, std::uint64_t> deletions;  // H index -> count
      for (std::size_t v = 0; v < n; ++v) {
        const std::uint32_t reduced =
            graph_canon(graph_delete_vertex(masks[n][g], n, v), n - 1);
        ++deletions[index[n - 1].at(reduced)];
      }
      for (const auto& [h, count] : deletions) {
        edges.push_back(EdgeSpec{{n - 1, h}, {n, g}, count * auts[n - 1][h]});
      }
    }
  }
  return build_table(spec_display(spec), std::move(ranks), edges);
}

/*
  Both tree families follow the same scheme: canonical labels, levels built
  by growing every attachment site, u(P;Q) = number of sites of P whose
  growth lands on Q, and hom = u * aut(Q).  d then falls out of the
  divisibility identity when the table is built.
*/
template <typename Parse, typename Grow, typename Aut>
UpdownTable gen_tree_family(const FamilySpec& spec, const std::string& seed, Parse parse,
                            Grow grow, Aut aut) {
  std::vector<std::vector<std::string>> levels(spec.max_rank + 1);
  std::vector<std::map<std::string, std::size_t>> index(spec.max_rank + 1);
  levels[0] = {seed};
  index[0][seed] = 0;
  for (std::size_t n = 0; n < spec.max_rank; ++n) {
    std::set<std::string> next;
    for (const auto& label : levels[n]) {
      for (auto& grown : grow(parse(label))) next.insert(std::move(grown));
    }
    levels[n + 1].assign(next.begin(), next.end());
    for (std::size_t i = 0; i < levels[n + 1].size(); ++i) {
      index[n + 1][levels[n + 1][i]] = i;
    }
  }

  std::vector<std::vector<ObjectSpec>> ranks(spec.max_rank + 1);
  std::vector<std::vector<std::uint64_t>> auts(spec.max_rank + 1);
  for (std::size_t n = 0; n <= spec.max_rank; ++n) {
    for (const auto& label : levels[n]) {
      auts[n].push_back(aut(parse(label)));
      ranks[n].push_back(ObjectSpec{label, auts[n].back()});
    }
  }

  std::vector<EdgeSpec> edges;
  for (std::size_t n = 0; n < spec.max_rank; ++n) {
    for (std::size_t i = 0; i < levels[n].size(); ++i) {
      std::map<std::size_t, std::uint64_t> growth;  // Q index -> site count
      for (const auto& grown : grow(parse(levels[n][i]))) {
        ++growth[index[n + 1].at(grown)];
      }
      for (const auto& [q, u] : growth) {
        edges.push_back(EdgeSpec{{n, i}, {n + 1, q}, u * auts[n + 1][q]});
      }
    }
  }
  return build_table(spec_display(spec), std::move(ranks), edges);
}

}  // namespace

UpdownTable gen_isoclass(const FamilySpec& spec) {
  if (spec.max_rank > family_rank_cap(spec.family)) {
    throw BudgetExceeded(std::string(family_name(spec.family)) + " is capped at rank " +
                         std::to_string(family_rank_cap(spec.family)) + ", requested " +
                         std::to_string(spec.max_rank));
  }
  switch (spec.family) {
    case Family::graphs:
      return gen_graphs(spec);
    case Family::rooted_trees:
      return gen_tree_family(
          spec, "()", [](const std::string& s) { return parse_rtree(s); },
          [](const RTree& t) { return rtree_grow(t); },
          [](const RTree& t) { return rtree_aut(t); });
    case Family::binary_trees:
      return gen_tree_family(
          spec, "o", [](const std::string& s) { return parse_btree(s); },
          [](const BTree& t) { return btree_grow(t); },
          [](const BTree& t) { return btree_aut(t); });
    default:
      throw UnsupportedFamily(std::string(family_name(spec.family)) +
                              " has a direct generator");
  }
}

}  // namespace updown::catalog
