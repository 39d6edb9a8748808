#include "updown/table.hpp"

#include <algorithm>
#include <utility>

#include "updown/errors.hpp"

namespace updown {

namespace {

std::string edge_key(ObjectId src, ObjectId dst) {
  return to_string(src) + "->" + to_string(dst);
}

}  // namespace

UpdownTable::UpdownTable(std::string name, std::vector<std::vector<ObjectSpec>> rank_specs,
                         const std::vector<EdgeSpec>& edge_specs)
    : name_(std::move(name)) {
  if (rank_specs.empty()) {
    throw TableSpecError("a table needs at least rank 0");
  }
  ranks_.resize(rank_specs.size());
  out_.resize(rank_specs.size());
  in_.resize(rank_specs.size());
  for (std::size_t r = 0; r < rank_specs.size(); ++r) {
    ranks_[r].reserve(rank_specs[r].size());
    out_[r].resize(rank_specs[r].size());
    in_[r].resize(rank_specs[r].size());
    for (std::size_t i = 0; i < rank_specs[r].size(); ++i) {
      auto& spec = rank_specs[r][i];
      if (spec.aut_order == 0) {
        throw TableSpecError("object " + to_string({r, i}) + " has aut_order 0");
      }
      ranks_[r].push_back(ObjectRecord{{r, i}, std::move(spec.label), spec.aut_order});
    }
  }

  for (const EdgeSpec& spec : edge_specs) {
    if (!contains(spec.src) || !contains(spec.dst)) {
      throw TableSpecError("edge " + edge_key(spec.src, spec.dst) +
                           " references a missing object");
    }
    if (spec.dst.rank != spec.src.rank + 1) {
      throw NonAdjacentEdge("edge " + edge_key(spec.src, spec.dst) +
                            " does not connect adjacent ranks");
    }
    if (spec.hom_size == 0) {
      throw TableSpecError("edge " + edge_key(spec.src, spec.dst) + " has hom_size 0");
    }
    const std::uint64_t aut_src = aut(spec.src);
    const std::uint64_t aut_dst = aut(spec.dst);
    if (spec.hom_size % aut_dst != 0) {
      throw DivisibilityViolation("edge " + edge_key(spec.src, spec.dst) + ": hom_size " +
                                  std::to_string(spec.hom_size) +
                                  " not divisible by aut(dst) = " + std::to_string(aut_dst));
    }
    if (spec.hom_size % aut_src != 0) {
      throw DivisibilityViolation("edge " + edge_key(spec.src, spec.dst) + ": hom_size " +
                                  std::to_string(spec.hom_size) +
                                  " not divisible by aut(src) = " + std::to_string(aut_src));
    }
    CoverEdge edge{spec.src, spec.dst, spec.hom_size, spec.hom_size / aut_dst,
                   spec.hom_size / aut_src};
    out_[spec.src.rank][spec.src.index].push_back(edge);
    in_[spec.dst.rank][spec.dst.index].push_back(edge);
    ++edge_count_;
  }

  for (auto& per_rank : out_) {
    for (auto& edges : per_rank) {
      std::sort(edges.begin(), edges.end(),
                [](const CoverEdge& a, const CoverEdge& b) { return a.dst < b.dst; });
      for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i - 1].dst == edges[i].dst) {
          throw DuplicateEdge("duplicate edge " + edge_key(edges[i].src, edges[i].dst));
        }
      }
    }
  }
  for (auto& per_rank : in_) {
    for (auto& edges : per_rank) {
      std::sort(edges.begin(), edges.end(),
                [](const CoverEdge& a, const CoverEdge& b) { return a.src < b.src; });
    }
  }
}

std::size_t UpdownTable::rank_size(std::size_t rank) const {
  return rank < ranks_.size() ? ranks_[rank].size() : 0;
}

std::size_t UpdownTable::object_count() const {
  std::size_t n = 0;
  for (const auto& r : ranks_) n += r.size();
  return n;
}

bool UpdownTable::contains(ObjectId id) const {
  return id.rank < ranks_.size() && id.index < ranks_[id.rank].size();
}

const ObjectRecord& UpdownTable::object(ObjectId id) const {
  if (!contains(id)) {
    throw RankOutOfRange("no object " + to_string(id) + " in table '" + name_ + "'");
  }
  return ranks_[id.rank][id.index];
}

const std::vector<ObjectRecord>& UpdownTable::rank(std::size_t rank) const {
  if (rank >= ranks_.size()) {
    throw RankOutOfRange("rank " + std::to_string(rank) + " exceeds max_rank " +
                         std::to_string(max_rank()));
  }
  return ranks_[rank];
}

const std::vector<CoverEdge>& UpdownTable::covers(ObjectId id) const {
  object(id);  // bounds check
  return out_[id.rank][id.index];
}

const std::vector<CoverEdge>& UpdownTable::covered_by(ObjectId id) const {
  object(id);
  return in_[id.rank][id.index];
}

const CoverEdge* UpdownTable::edge(ObjectId src, ObjectId dst) const {
  const auto& edges = covers(src);
  auto it = std::lower_bound(edges.begin(), edges.end(), dst,
                             [](const CoverEdge& e, ObjectId key) { return e.dst < key; });
  if (it != edges.end() && it->dst == dst) return &*it;
  return nullptr;
}

bool structurally_equal(const UpdownTable& a, const UpdownTable& b) {
  if (a.ranks_.size() != b.ranks_.size()) return false;
  for (std::size_t r = 0; r < a.ranks_.size(); ++r) {
    if (a.ranks_[r].size() != b.ranks_[r].size()) return false;
    for (std::size_t i = 0; i < a.ranks_[r].size(); ++i) {
      const auto& x = a.ranks_[r][i];
      const auto& y = b.ranks_[r][i];
      if (x.label != y.label || x.aut_order != y.aut_order) return false;
    }
    for (std::size_t i = 0; i < a.ranks_[r].size(); ++i) {
      const auto& ex = a.out_[r][i];
      const auto& ey = b.out_[r][i];
      if (ex.size() != ey.size()) return false;
      for (std::size_t k = 0; k < ex.size(); ++k) {
        if (ex[k].dst != ey[k].dst || ex[k].hom_size != ey[k].hom_size) return false;
      }
    }
  }
  return true;
}

UpdownTable build_table(std::string name, std::vector<std::vector<ObjectSpec>> rank_specs,
                        const std::vector<EdgeSpec>& edge_specs) {
  return UpdownTable(std::move(name), std::move(rank_specs), edge_specs);
}

UpdownTable relabel(const UpdownTable& table,
                    const std::vector<std::vector<std::string>>& labels, std::string name) {
  std::vector<std::vector<ObjectSpec>> rank_specs(table.max_rank() + 1);
  for (std::size_t r = 0; r <= table.max_rank(); ++r) {
    for (const auto& rec : table.rank(r)) {
      rank_specs[r].push_back(ObjectSpec{labels.at(r).at(rec.id.index), rec.aut_order});
    }
  }
  std::vector<EdgeSpec> edges;
  edges.reserve(table.edge_count());
  for (std::size_t r = 0; r <= table.max_rank(); ++r) {
    for (const auto& rec : table.rank(r)) {
      for (const auto& e : table.covers(rec.id)) {
        edges.push_back(EdgeSpec{e.src, e.dst, e.hom_size});
      }
    }
  }
  return build_table(name.empty() ? table.name() : std::move(name), std::move(rank_specs),
                     edges);
}

ValidationReport validate(const UpdownTable& table) {
  ValidationReport report;
  auto flag = [&report](std::string axiom, std::string where, std::string message) {
    report.ok = false;
    report.violations.push_back({std::move(axiom), std::move(where), std::move(message)});
  };

  if (table.rank_size(0) != 1) {
    flag("A2-single-root", "rank 0",
         "rank 0 must contain exactly one object, found " + std::to_string(table.rank_size(0)));
  }

  for (std::size_t r = 0; r <= table.max_rank(); ++r) {
    for (const auto& rec : table.rank(r)) {
      if (rec.aut_order < 1) {
        flag("A3-aut-positive", to_string(rec.id), "automorphism order must be >= 1");
      }
      if (r >= 1 && table.covered_by(rec.id).empty()) {
        flag("A2-reachability", to_string(rec.id),
             "object of rank >= 1 has no incoming covering edge");
      }
      for (const auto& e : table.covers(rec.id)) {
        const std::string where = to_string(e.src) + "->" + to_string(e.dst);
        if (e.dst.rank != e.src.rank + 1) {
          flag("A4-adjacency", where, "covering edge must connect adjacent ranks");
        }
        if (e.u < 1 || e.d < 1 || e.hom_size < 1) {
          flag("A2-nonempty-hom", where, "edge multiplicities must be positive");
        }
        if (e.u * table.aut(e.dst) != e.hom_size || e.d * table.aut(e.src) != e.hom_size) {
          flag("A5-free-actions", where,
               "u*aut(dst) and d*aut(src) must both equal hom_size");
        }
      }
    }
  }
  return report;
}

}  // namespace updown
