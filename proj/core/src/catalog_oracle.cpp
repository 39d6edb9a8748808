#include "updown/catalog.hpp"

#include <array>
#include <map>
#include <numeric>

#include "catalog_detail.hpp"
#include "updown/errors.hpp"

namespace updown::catalog {

namespace detail {

std::string format_tuple(const std::vector<std::uint64_t>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  out += ')';
  return out;
}

std::vector<std::uint64_t> parse_tuple(const std::string& label) {
  std::vector<std::uint64_t> parts;
  std::uint64_t current = 0;
  bool in_number = false;
  for (char ch : label) {
    if (ch >= '0' && ch <= '9') {
      current = current * 10 + (ch - '0');
      in_number = true;
    } else {
      if (in_number) parts.push_back(current);
      current = 0;
      in_number = false;
    }
  }
  return parts;
}

std::vector<std::vector<std::uint64_t>> partitions_of(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> current;
  std::function<void(std::uint64_t, std::uint64_t)> recurse =
      [&](std::uint64_t remaining, std::uint64_t largest) {
        if (remaining == 0) {
          out.push_back(current);
          return;
        }
        for (std::uint64_t part = std::min(remaining, largest); part >= 1; --part) {
          current.push_back(part);
          recurse(remaining - part, part);
          current.pop_back();
        }
      };
  recurse(n, n == 0 ? 1 : n);
  return out;
}

std::vector<std::vector<std::uint64_t>> compositions_of(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> current;
  std::function<void(std::uint64_t)> recurse = [&](std::uint64_t remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::uint64_t part = 1; part <= remaining; ++part) {
      current.push_back(part);
      recurse(remaining - part);
      current.pop_back();
    }
  };
  recurse(n);
  return out;
}

std::string necklace_canon(const std::string& beads) {
  if (beads.empty()) return beads;
  std::string best = beads;
  std::string rotated = beads;
  for (std::size_t k = 1; k < beads.size(); ++k) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (rotated < best) best = rotated;
  }
  return best;
}

std::uint64_t necklace_aut(const std::string& beads) {
  if (beads.empty()) return 1;
  std::uint64_t count = 0;
  std::string rotated = beads;
  for (std::size_t k = 0; k < beads.size(); ++k) {
    if (rotated == beads) ++count;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  }
  return count;
}

std::vector<std::string> dyck_words(std::size_t n) {
  std::vector<std::string> out;
  std::string current;
  std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t open,
                                                              std::size_t closed) {
    if (open == n && closed == n) {
      out.push_back(current);
      return;
    }
    if (open < n) {
      current += '+';
      recurse(open + 1, closed);
      current.pop_back();
    }
    if (closed < open) {
      current += '-';
      recurse(open, closed + 1);
      current.pop_back();
    }
  };
  recurse(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

RTree parse_rtree(const std::string& label) {
  std::size_t pos = 0;
  std::function<RTree()> recurse = [&]() {
    RTree node;
    ++pos;  // '('
    while (pos < label.size() && label[pos] == '(') {
      node.children.push_back(recurse());
    }
    ++pos;  // ')'
    return node;
  };
  return recurse();
}

std::string rtree_label(const RTree& tree) {
  std::vector<std::string> parts;
  parts.reserve(tree.children.size());
  for (const auto& child : tree.children) parts.push_back(rtree_label(child));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& part : parts) out += part;
  out += ')';
  return out;
}

std::size_t rtree_vertex_count(const RTree& tree) {
  std::size_t count = 1;
  for (const auto& child : tree.children) count += rtree_vertex_count(child);
  return count;
}

std::uint64_t rtree_aut(const RTree& tree) {
  std::uint64_t aut = 1;
  std::vector<std::pair<std::string, const RTree*>> keyed;
  for (const auto& child : tree.children) {
    keyed.emplace_back(rtree_label(child), &child);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
    const std::uint64_t child_aut = rtree_aut(*keyed[i].second);
    for (std::size_t m = 2; m <= j - i; ++m) aut *= m;  // m! for the run
    for (std::size_t m = i; m < j; ++m) aut *= child_aut;
    i = j;
  }
  return aut;
}

std::vector<std::string> rtree_grow(const RTree& tree) {
  std::vector<std::string> out;
  // Attach a leaf at vertex k in preorder; regrow the whole label each time.
  std::size_t total = rtree_vertex_count(tree);
  for (std::size_t k = 0; k < total; ++k) {
    RTree copy = tree;
    std::size_t seen = 0;
    std::function<bool(RTree&)> attach = [&](RTree& node) {
      if (seen++ == k) {
        node.children.push_back(RTree{});
        return true;
      }
      for (auto& child : node.children) {
        if (attach(child)) return true;
      }
      return false;
    };
    attach(copy);
    out.push_back(rtree_label(copy));
  }
  return out;
}

BTree parse_btree(const std::string& label) {
  std::size_t pos = 0;
  std::function<BTree()> recurse = [&]() {
    BTree node;
    if (label[pos] == 'o') {
      ++pos;
      return node;
    }
    ++pos;  // '('
    node.children.push_back(recurse());
    node.children.push_back(recurse());
    ++pos;  // ')'
    return node;
  };
  return recurse();
}

std::string btree_label(const BTree& tree) {
  if (tree.leaf()) return "o";
  std::string a = btree_label(tree.children[0]);
  std::string b = btree_label(tree.children[1]);
  if (b < a) std::swap(a, b);
  return "(" + a + b + ")";
}

std::size_t btree_leaf_count(const BTree& tree) {
  if (tree.leaf()) return 1;
  return btree_leaf_count(tree.children[0]) + btree_leaf_count(tree.children[1]);
}

std::uint64_t btree_aut(const BTree& tree) {
  if (tree.leaf()) return 1;
  const std::uint64_t left = btree_aut(tree.children[0]);
  const std::uint64_t right = btree_aut(tree.children[1]);
  const bool symmetric =
      btree_label(tree.children[0]) == btree_label(tree.children[1]);
  return left * right * (symmetric ? 2 : 1);
}

std::vector<std::string> btree_grow(const BTree& tree) {
  std::vector<std::string> out;
  const std::size_t total = btree_leaf_count(tree);
  for (std::size_t k = 0; k < total; ++k) {
    BTree copy = tree;
    std::size_t seen = 0;
    std::function<bool(BTree&)> attach = [&](BTree& node) {
      if (node.leaf()) {
        if (seen++ == k) {
          node.children.push_back(BTree{});
          node.children.push_back(BTree{});
          return true;
        }
        return false;
      }
      return attach(node.children[0]) || attach(node.children[1]);
    };
    attach(copy);
    out.push_back(btree_label(copy));
  }
  return out;
}

std::vector<std::vector<std::size_t>> btree_leaf_metric(const BTree& tree) {
  // Collect, for every leaf in traversal order, the list of internal vertices
  // (as preorder ids) on its root path; the metric then counts the symmetric
  // difference of the two paths' tails plus the shared top vertex.
  std::vector<std::vector<std::size_t>> root_paths;
  std::vector<std::size_t> current;
  std::size_t next_id = 0;
  std::function<void(const BTree&)> walk = [&](const BTree& node) {
    if (node.leaf()) {
      root_paths.push_back(current);
      return;
    }
    current.push_back(next_id++);
    walk(node.children[0]);
    walk(node.children[1]);
    current.pop_back();
  };
  walk(tree);

  const std::size_t leaves = root_paths.size();
  std::vector<std::vector<std::size_t>> metric(leaves, std::vector<std::size_t>(leaves, 0));
  for (std::size_t p = 0; p < leaves; ++p) {
    for (std::size_t q = p + 1; q < leaves; ++q) {
      const auto& a = root_paths[p];
      const auto& b = root_paths[q];
      std::size_t shared = 0;
      while (shared < a.size() && shared < b.size() && a[shared] == b[shared]) ++shared;
      // Path visits the internal vertices below the meeting point on both
      // sides plus the meeting vertex itself.
      metric[p][q] = metric[q][p] = (a.size() - shared) + (b.size() - shared) + 1;
    }
  }
  return metric;
}

std::size_t graph_pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  // Row-major over i < j.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::string graph_label(std::uint32_t mask, std::size_t n) {
  std::string out = std::to_string(n) + ":";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (mask >> graph_pair_index(i, j, n) & 1u) {
        if (!first) out += ',';
        out += static_cast<char>('0' + i);
        out += static_cast<char>('0' + j);
        first = false;
      }
    }
  }
  return out;
}

std::pair<std::uint32_t, std::size_t> parse_graph_label(const std::string& label) {
  const auto colon = label.find(':');
  const std::size_t n = std::stoul(label.substr(0, colon));
  std::uint32_t mask = 0;
  for (std::size_t pos = colon + 1; pos + 1 < label.size(); pos += 3) {
    const std::size_t i = label[pos] - '0';
    const std::size_t j = label[pos + 1] - '0';
    mask |= 1u << graph_pair_index(i, j, n);
  }
  return {mask, n};
}

namespace {

// Permutations of [n] with their induced maps on pair indices, built once.
struct PermTable {
  std::vector<std::vector<std::uint8_t>> pair_maps;
};

const PermTable& perm_table(std::size_t n) {
  static std::array<PermTable, kMaxGraphVertices + 1> tables;
  static std::array<bool, kMaxGraphVertices + 1> ready{};
  PermTable& table = tables.at(n);
  if (!ready.at(n)) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::uint8_t> pair_map(n * (n - 1) / 2);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          pair_map[graph_pair_index(i, j, n)] =
              static_cast<std::uint8_t>(graph_pair_index(perm[i], perm[j], n));
        }
      }
      table.pair_maps.push_back(std::move(pair_map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    ready.at(n) = true;
  }
  return table;
}

std::uint32_t apply_pair_map(std::uint32_t mask, const std::vector<std::uint8_t>& map) {
  std::uint32_t out = 0;
  while (mask) {
    const unsigned bit = __builtin_ctz(mask);
    out |= 1u << map[bit];
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

std::uint32_t graph_canon(std::uint32_t mask, std::size_t n) {
  if (n < 2) return 0;
  std::uint32_t best = mask;
  for (const auto& map : perm_table(n).pair_maps) {
    best = std::min(best, apply_pair_map(mask, map));
  }
  return best;
}

std::uint64_t graph_aut(std::uint32_t mask, std::size_t n) {
  if (n < 2) return 1;
  std::uint64_t count = 0;
  for (const auto& map : perm_table(n).pair_maps) {
    if (apply_pair_map(mask, map) == mask) ++count;
  }
  return count;
}

std::uint32_t graph_delete_vertex(std::uint32_t mask, std::size_t n, std::size_t v) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == v) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == v) continue;
      if (mask >> graph_pair_index(i, j, n) & 1u) {
        const std::size_t ni = i > v ? i - 1 : i;
        const std::size_t nj = j > v ? j - 1 : j;
        out |= 1u << graph_pair_index(ni, nj, n - 1);
      }
    }
  }
  return out;
}

void for_each_injection(std::size_t k, std::size_t m,
                        const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> image;
  std::vector<bool> used(m, false);
  std::function<void()> recurse = [&]() {
    if (image.size() == k) {
      visit(image);
      return;
    }
    for (std::size_t target = 0; target < m; ++target) {
      if (used[target]) continue;
      used[target] = true;
      image.push_back(target);
      recurse();
      image.pop_back();
      used[target] = false;
    }
  };
  recurse();
}

}  // namespace detail

namespace {

using namespace detail;

std::uint64_t graphs_hom(const std::string& p_label, const std::string& q_label) {
  const auto [h_mask, h_n] = parse_graph_label(p_label);
  const auto [g_mask, g_n] = parse_graph_label(q_label);
  std::uint64_t count = 0;
  for_each_injection(h_n, g_n, [&](const std::vector<std::size_t>& f) {
    for (std::size_t i = 0; i < h_n; ++i) {
      for (std::size_t j = i + 1; j < h_n; ++j) {
        const bool in_h = h_mask >> graph_pair_index(i, j, h_n) & 1u;
        const bool in_g = g_mask >> graph_pair_index(f[i], f[j], g_n) & 1u;
        if (in_h != in_g) return;
      }
    }
    ++count;
  });
  return count;
}

std::uint64_t necklaces_hom(const std::string& p_label, const std::string& q_label) {
  const std::size_t m = p_label.size();
  const std::size_t n = q_label.size();
  if (m == 0) return 1;  // the empty map is the unique morphism out of the root
  // A cyclic-order-preserving injection misses one target position j and
  // wraps the rest; s picks which source lands just after j.
  std::uint64_t count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t s = 0; s < m; ++s) {
      bool match = true;
      for (std::size_t k = 0; k < m && match; ++k) {
        const std::size_t target = (j + 1 + (k + s) % m) % n;
        match = p_label[k] == q_label[target];
      }
      count += match;
    }
  }
  return count;
}

std::uint64_t compositions_hom(const std::string& p_label, const std::string& q_label) {
  const auto p = parse_tuple(p_label);
  const auto q = parse_tuple(q_label);
  if (p.size() > q.size()) return 0;
  // Order-preserving injections are the size-|p| position subsets of q.
  std::uint64_t count = 0;
  std::vector<std::size_t> choice(p.size());
  std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t a,
                                                              std::size_t from) {
    if (a == p.size()) {
      ++count;
      return;
    }
    for (std::size_t pos = from; pos < q.size(); ++pos) {
      if (p[a] <= q[pos]) {
        recurse(a + 1, pos + 1);
      }
    }
  };
  recurse(0, 0);
  return count;
}

std::uint64_t planar_trees_hom(const std::string& p_label, const std::string& q_label) {
  // Order-preserving injections whose complement is a consecutive position
  // pair carrying the balanced '+','-' values, and which intertwine the
  // words.  Enumerated literally over complement pairs.
  const std::size_t n2 = q_label.size();
  std::uint64_t count = 0;
  for (std::size_t a = 0; a + 1 < n2; ++a) {
    for (std::size_t b = a + 1; b < n2; ++b) {
      if (b != a + 1) continue;
      if (q_label[a] != '+' || q_label[b] != '-') continue;
      std::string reduced;
      reduced.reserve(n2 - 2);
      for (std::size_t i = 0; i < n2; ++i) {
        if (i != a && i != b) reduced += q_label[i];
      }
      count += reduced == p_label;
    }
  }
  return count;
}

std::uint64_t binary_trees_hom(const std::string& p_label, const std::string& q_label) {
  const BTree p = parse_btree(p_label);
  const BTree q = parse_btree(q_label);
  const auto dp = btree_leaf_metric(p);
  const auto dq = btree_leaf_metric(q);
  const std::size_t lp = dp.size();
  const std::size_t lq = dq.size();
  if (lq != lp + 1) return 0;
  std::uint64_t count = 0;
  for_each_injection(lp, lq, [&](const std::vector<std::size_t>& f) {
    for (std::size_t i = 0; i < lp; ++i) {
      for (std::size_t j = i + 1; j < lp; ++j) {
        if (dq[f[i]][f[j]] < dp[i][j]) return;
      }
    }
    // The one leaf outside the image must sit at distance 1 from an image leaf.
    std::vector<bool> hit(lq, false);
    for (std::size_t target : f) hit[target] = true;
    std::size_t missing = 0;
    while (hit[missing]) ++missing;
    for (std::size_t i = 0; i < lp; ++i) {
      if (dq[missing][f[i]] == 1) {
        ++count;
        return;
      }
    }
  });
  return count;
}

std::uint64_t base_s_hom(const std::string& p_label, const std::string& q_label) {
  const std::size_t m = std::stoul(p_label.substr(1, p_label.size() - 2));
  const std::size_t n = std::stoul(q_label.substr(1, q_label.size() - 2));
  std::uint64_t count = 0;
  for_each_injection(m, n, [&](const std::vector<std::size_t>&) { ++count; });
  return count;
}

}  // namespace

std::uint64_t hom_oracle(Family family, const std::string& p_label,
                         const std::string& q_label) {
  switch (family) {
    case Family::graphs: return graphs_hom(p_label, q_label);
    case Family::necklaces: return necklaces_hom(p_label, q_label);
    case Family::compositions: return compositions_hom(p_label, q_label);
    case Family::planar_trees: return planar_trees_hom(p_label, q_label);
    case Family::binary_trees: return binary_trees_hom(p_label, q_label);
    case Family::base_s: return base_s_hom(p_label, q_label);
    default:
      throw UnsupportedFamily(std::string("no explicit morphism model for family ") +
                              family_name(family));
  }
}

}  // namespace updown::catalog
