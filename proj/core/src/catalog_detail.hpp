#pragma once

// Internal helpers shared by the catalog generators and the hom oracle:
// canonical forms, label codecs, and small enumeration utilities.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace updown::catalog::detail {

// ---- integer tuples: "(2,1)" / "()" ----------------------------------------

std::string format_tuple(const std::vector<std::uint64_t>& parts);
std::vector<std::uint64_t> parse_tuple(const std::string& label);

std::vector<std::vector<std::uint64_t>> partitions_of(std::uint64_t n);
std::vector<std::vector<std::uint64_t>> compositions_of(std::uint64_t n);

// ---- necklaces: digit strings, canonical = lexicographically least rotation

std::string necklace_canon(const std::string& beads);
std::uint64_t necklace_aut(const std::string& beads);  // rotation stabilizer order

// ---- Dyck words: '+'/'-' strings --------------------------------------------

std::vector<std::string> dyck_words(std::size_t n);

// ---- rooted trees: canonical nested parentheses, children sorted ------------

struct RTree {
  std::vector<RTree> children;
};

RTree parse_rtree(const std::string& label);
std::string rtree_label(const RTree& tree);  // canonicalizes (sorts) on the way out
std::size_t rtree_vertex_count(const RTree& tree);
std::uint64_t rtree_aut(const RTree& tree);
/// Labels of the trees obtained by attaching one new leaf at each vertex,
/// in a fixed traversal order (one entry per vertex, duplicates preserved).
std::vector<std::string> rtree_grow(const RTree& tree);

// ---- binary rooted trees: "o" leaves, "(LR)" internal, L <= R ---------------

struct BTree {
  std::vector<BTree> children;  // empty (leaf) or exactly two
  bool leaf() const { return children.empty(); }
};

BTree parse_btree(const std::string& label);
std::string btree_label(const BTree& tree);
std::size_t btree_leaf_count(const BTree& tree);
std::uint64_t btree_aut(const BTree& tree);
/// Labels obtained by replacing each leaf with a bud (cherry), one entry per
/// leaf in traversal order.
std::vector<std::string> btree_grow(const BTree& tree);
/// Pairwise leaf metric: number of internal vertices on the path between two
/// leaves, indexed by traversal order.  d[i][i] = 0.
std::vector<std::vector<std::size_t>> btree_leaf_metric(const BTree& tree);

// ---- small graphs as adjacency bitmasks over vertex pairs -------------------

constexpr std::size_t kMaxGraphVertices = 7;

std::size_t graph_pair_index(std::size_t i, std::size_t j, std::size_t n);
std::string graph_label(std::uint32_t mask, std::size_t n);
/// Parses "n:ij,kl,..." back into (mask, n).
std::pair<std::uint32_t, std::size_t> parse_graph_label(const std::string& label);
std::uint32_t graph_canon(std::uint32_t mask, std::size_t n);
std::uint64_t graph_aut(std::uint32_t mask, std::size_t n);
/// Mask of the induced subgraph after deleting one vertex (indices shift down).
std::uint32_t graph_delete_vertex(std::uint32_t mask, std::size_t n, std::size_t v);

// ---- injections -------------------------------------------------------------

/// Calls visit once per injective map [k] -> [m], passed as the image vector.
void for_each_injection(std::size_t k, std::size_t m,
                        const std::function<void(const std::vector<std::size_t>&)>& visit);

}  // namespace updown::catalog::detail
