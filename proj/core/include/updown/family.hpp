#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace updown {

/// The built-in example families.  base_s is the one-object-per-rank
/// category of finite sets with injections; it underlies monomials and is
/// addressable by the hom oracle but is not one of the ten CLI builtins.
enum class Family {
  subsets,             // parameter n: subsets of {1..n}
  monomials,           // parameter n: monomials in n commuting variables
  graphs,              // iso classes of finite simple graphs
  necklaces,           // parameter c: cyclic bead strings in c colors
  partitions_unit,     // integer partitions, unit covering weights
  partitions_kingman,  // integer partitions, Kingman branching weights
  compositions,        // integer compositions
  planar_trees,        // planar rooted trees as Dyck words
  rooted_trees,        // iso classes of rooted trees
  binary_trees,        // iso classes of binary rooted trees
  base_s,
};

struct FamilySpec {
  Family family = Family::subsets;
  std::uint64_t param = 0;  // n or c; 0 means "not applicable"
  std::size_t max_rank = 0;
};

const char* family_name(Family family);
/// Throws UnknownFamily.
Family family_from_name(std::string_view name);

bool family_has_param(Family family);
std::uint64_t family_default_param(Family family);
std::size_t family_default_rank(Family family, std::uint64_t param);
/// Hard safety cap on the tabulated rank (enumeration cost and exact
/// 64-bit hom sizes are guaranteed only below it).
std::size_t family_rank_cap(Family family);

/// The ten builtin rows with default parameters and ranks, in display order.
std::vector<FamilySpec> builtin_specs();

/// "name" or "name:param" for display; matches the CLI builtin syntax.
std::string spec_display(const FamilySpec& spec);

}  // namespace updown
