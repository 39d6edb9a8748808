#include "updown/family.hpp"

#include "updown/errors.hpp"

namespace updown {

const char* family_name(Family family) {
  switch (family) {
    case Family::subsets: return "subsets";
    case Family::monomials: return "monomials";
    case Family::graphs: return "graphs";
    case Family::necklaces: return "necklaces";
    case Family::partitions_unit: return "partitions-unit";
    case Family::partitions_kingman: return "partitions-kingman";
    case Family::compositions: return "compositions";
    case Family::planar_trees: return "planar-trees";
    case Family::rooted_trees: return "rooted-trees";
    case Family::binary_trees: return "binary-trees";
    case Family::base_s: return "base-s";
  }
  throw UnknownFamily("bad family enum value");
}

Family family_from_name(std::string_view name) {
  for (Family f : {Family::subsets, Family::monomials, Family::graphs, Family::necklaces,
                   Family::partitions_unit, Family::partitions_kingman, Family::compositions,
                   Family::planar_trees, Family::rooted_trees, Family::binary_trees,
                   Family::base_s}) {
    if (name == family_name(f)) return f;
  }
  throw UnknownFamily("unknown family '" + std::string(name) + "'");
}

bool family_has_param(Family family) {
  return family == Family::subsets || family == Family::monomials ||
         family == Family::necklaces;
}

std::uint64_t family_default_param(Family family) {
  switch (family) {
    case Family::subsets: return 5;
    case Family::monomials: return 3;
    case Family::necklaces: return 2;
    default: return 0;
  }
}

std::size_t family_default_rank(Family family, std::uint64_t param) {
  switch (family) {
    case Family::subsets: return static_cast<std::size_t>(param);
    case Family::monomials: return 8;
    case Family::graphs: return 6;
    case Family::necklaces: return 10;
    case Family::partitions_unit: return 12;
    case Family::partitions_kingman: return 12;
    case Family::compositions: return 12;
    case Family::planar_trees: return 8;
    case Family::rooted_trees: return 8;
    case Family::binary_trees: return 9;
    case Family::base_s: return 8;
  }
  throw UnknownFamily("bad family enum value");
}

std::size_t family_rank_cap(Family family) {
  switch (family) {
    case Family::subsets: return 16;
    case Family::monomials: return 12;
    case Family::graphs: return 7;
    case Family::necklaces: return 16;
    case Family::partitions_unit: return 18;
    case Family::partitions_kingman: return 18;
    case Family::compositions: return 14;
    case Family::planar_trees: return 10;
    case Family::rooted_trees: return 10;
    case Family::binary_trees: return 12;
    case Family::base_s: return 18;
  }
  throw UnknownFamily("bad family enum value");
}

std::vector<FamilySpec> builtin_specs() {
  std::vector<FamilySpec> specs;
  for (Family f : {Family::subsets, Family::monomials, Family::graphs, Family::necklaces,
                   Family::partitions_unit, Family::partitions_kingman, Family::compositions,
                   Family::planar_trees, Family::rooted_trees, Family::binary_trees}) {
    const std::uint64_t param = family_default_param(f);
    specs.push_back(FamilySpec{f, param, family_default_rank(f, param)});
  }
  return specs;
}

std::string spec_display(const FamilySpec& spec) {
  std::string out = family_name(spec.family);
  if (family_has_param(spec.family)) {
    out += ':';
    out += std::to_string(spec.param);
  }
  return out;
}

}  // namespace updown
