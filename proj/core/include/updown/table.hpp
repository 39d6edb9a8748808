#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "updown/object_id.hpp"

namespace updown {

struct ObjectRecord {
  ObjectId id;
  std::string label;        // display only, need not be unique
  std::uint64_t aut_order;  // |Aut p| >= 1
};

/// One covering pair p -> q between adjacent ranks.  hom_size is |Hom(p,q)|;
/// u and d are the quotient multiplicities, always derived as
/// u = hom_size / aut(dst) and d = hom_size / aut(src).
struct CoverEdge {
  ObjectId src;
  ObjectId dst;
  std::uint64_t hom_size;
  std::uint64_t u;
  std::uint64_t d;
};

struct ObjectSpec {
  std::string label;
  std::uint64_t aut_order = 1;
};

struct EdgeSpec {
  ObjectId src;
  ObjectId dst;
  std::uint64_t hom_size;
};

/// The finite truncation of an updown category: per-rank object records plus
/// covering edges.  Ranks may be empty (a family that dies out keeps its
/// upper ranks as empty lists).  Immutable after construction; all queries
/// are const and safe to call concurrently.
class UpdownTable {
 public:
  UpdownTable(std::string name, std::vector<std::vector<ObjectSpec>> rank_specs,
              const std::vector<EdgeSpec>& edge_specs);

  const std::string& name() const { return name_; }
  std::size_t max_rank() const { return ranks_.size() - 1; }
  std::size_t rank_size(std::size_t rank) const;
  std::size_t object_count() const;
  std::size_t edge_count() const { return edge_count_; }

  bool contains(ObjectId id) const;
  const ObjectRecord& object(ObjectId id) const;
  std::uint64_t aut(ObjectId id) const { return object(id).aut_order; }
  const std::vector<ObjectRecord>& rank(std::size_t rank) const;

  /// Outgoing covering edges of p, sorted by destination index.
  const std::vector<CoverEdge>& covers(ObjectId id) const;
  /// Incoming covering edges of p, sorted by source index.
  const std::vector<CoverEdge>& covered_by(ObjectId id) const;
  /// Null when (src, dst) is not a covering pair.
  const CoverEdge* edge(ObjectId src, ObjectId dst) const;

  /// Same ranks, labels, automorphism orders and hom sizes (name ignored).
  friend bool structurally_equal(const UpdownTable& a, const UpdownTable& b);

 private:
  std::string name_;
  std::vector<std::vector<ObjectRecord>> ranks_;
  std::vector<std::vector<std::vector<CoverEdge>>> out_;
  std::vector<std::vector<std::vector<CoverEdge>>> in_;
  std::size_t edge_count_ = 0;
};

/// Builds a table from object and edge specs.  u and d are computed by exact
/// integer division; construction fails if a hom size is not divisible by the
/// automorphism order of either endpoint.
///
/// Throws: TableSpecError (and subclasses NonAdjacentEdge, DuplicateEdge,
/// DivisibilityViolation).
UpdownTable build_table(std::string name,
                        std::vector<std::vector<ObjectSpec>> rank_specs,
                        const std::vector<EdgeSpec>& edge_specs);

/// Rebuilds a table with new labels (and optionally a new name), preserving
/// all structure.
UpdownTable relabel(const UpdownTable& table, const std::vector<std::vector<std::string>>& labels,
                    std::string name = {});

struct Violation {
  std::string axiom;    // short tag, e.g. "A2-single-root"
  std::string where;    // object id or edge key
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks the table-level axiom residues: a unique rank-0 object, every
/// higher object reachable through covering edges, edges between adjacent
/// ranks only, positive multiplicities, and u*aut(dst) = hom = d*aut(src) on
/// every edge.  Violations are reported as data, never thrown.
ValidationReport validate(const UpdownTable& table);

}  // namespace updown
