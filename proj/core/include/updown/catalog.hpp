#pragma once

#include <cstdint>
#include <string>

#include "updown/family.hpp"
#include "updown/table.hpp"

namespace updown::catalog {

/// Families with a direct description: subsets (a power of the two-object
/// segment category), monomials (a power of base_s), both partition
/// categories, compositions, necklaces, planar trees, and base_s itself.
/// Covering weights for compositions, necklaces and planar trees come from
/// the hom oracle.
///
/// Throws BudgetExceeded when spec.max_rank passes the family rank cap.
UpdownTable gen_elementary(const FamilySpec& spec);

/// Iso-class families built by extension with canonical-form deduplication:
/// graphs, rooted trees, binary trees.  Automorphism orders are counted
/// exactly; hom sizes come from deletion counting (graphs) or growth-site
/// counting reconciled through the divisibility identity (trees).
UpdownTable gen_isoclass(const FamilySpec& spec);

/// Dispatches on the family.
UpdownTable make_family(const FamilySpec& spec);

/// |Hom(p, q)| for q one rank above p, by exhaustive enumeration of
/// injections satisfying the family's morphism predicate.  Labels are the
/// canonical labels produced by the generators.  Supported families:
/// graphs, necklaces, compositions, planar_trees, binary_trees, base_s.
///
/// Throws UnsupportedFamily for the rest.
std::uint64_t hom_oracle(Family family, const std::string& p_label, const std::string& q_label);

}  // namespace updown::catalog
