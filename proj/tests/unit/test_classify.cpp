#include <doctest.h>

#include "test_support.hpp"

using namespace updown;
using namespace testsupport;

namespace {

std::vector<std::uint64_t> known(const std::vector<std::optional<std::uint64_t>>& seq) {
  std::vector<std::uint64_t> out;
  for (const auto& v : seq) {
    REQUIRE(v.has_value());
    out.push_back(*v);
  }
  return out;
}

}  // namespace

TEST_CASE("planar trees are univalent and evenly up-covered with u_n = 2n+1") {
  const ClassificationFlags flags = classify(family(Family::planar_trees, 0, 5));
  CHECK(flags.univalent);
  CHECK(!flags.unital);
  CHECK(!flags.simple);
  CHECK(flags.evenly_up);
  CHECK(known(flags.up_seq) == std::vector<std::uint64_t>{1, 3, 5, 7, 9});
  CHECK(!flags.evenly_down);
  CHECK(!flags.factorial);
}

TEST_CASE("necklaces are factorial and evenly up-covered with u_m = mc") {
  const ClassificationFlags flags = classify(family(Family::necklaces, 3, 5));
  CHECK(!flags.univalent);
  CHECK(flags.evenly_up);
  CHECK(known(flags.up_seq) == std::vector<std::uint64_t>{3, 3, 6, 9, 12});
  CHECK(flags.evenly_down);
  CHECK(flags.factorial);
  CHECK(known(flags.down_seq) == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
}

TEST_CASE("subsets are unital but not simple") {
  const ClassificationFlags flags = classify(family(Family::subsets, 2, 2));
  CHECK(flags.univalent);
  CHECK(flags.unital);
  CHECK(!flags.simple);
  CHECK(flags.evenly_up);
  CHECK(flags.factorial);
}

TEST_CASE("the segment category is simple and factorial") {
  const ClassificationFlags flags = classify(segment_table());
  CHECK(flags.simple);
  CHECK(flags.unital);
  CHECK(flags.factorial);
  CHECK(flags.evenly_up);
}

TEST_CASE("empty upper ranks constrain nothing") {
  const ClassificationFlags flags = classify(segment_table(4));
  CHECK(flags.evenly_up);
  REQUIRE(flags.up_seq.size() == 4);
  CHECK(flags.up_seq[0] == 1);
  CHECK(flags.up_seq[1] == 0);  // the rank-1 object has no covers
  CHECK(!flags.up_seq[2].has_value());
  CHECK(!flags.up_seq[3].has_value());
  CHECK(flags.factorial);  // d_1 = 1 and the empty ranks are unconstrained
}

TEST_CASE("classification flags match the known profile of every family") {
  struct Row {
    Family family;
    std::uint64_t param;
    std::size_t rank;
    bool univalent, evenly_up, factorial;
  };
  const std::vector<Row> rows = {
      {Family::subsets, 5, 5, true, true, true},
      {Family::monomials, 3, 5, false, true, true},
      {Family::graphs, 0, 5, false, true, true},
      {Family::necklaces, 2, 6, false, true, true},
      {Family::partitions_unit, 0, 6, true, false, false},
      {Family::partitions_kingman, 0, 6, false, false, false},
      {Family::compositions, 0, 6, true, false, false},
      {Family::planar_trees, 0, 6, true, true, false},
      {Family::rooted_trees, 0, 6, false, true, false},
      {Family::binary_trees, 0, 6, false, true, false},
  };
  for (const Row& row : rows) {
    CAPTURE(family_name(row.family));
    const ClassificationFlags flags = classify(family(row.family, row.param, row.rank));
    CHECK(flags.univalent == row.univalent);
    CHECK(flags.evenly_up == row.evenly_up);
    CHECK(flags.factorial == row.factorial);
  }
}

TEST_CASE("young's lattice is unital, compositions merely univalent") {
  const ClassificationFlags young = classify(family(Family::partitions_unit, 0, 5));
  CHECK(young.unital);
  CHECK(!young.simple);
  const ClassificationFlags comp = classify(family(Family::compositions, 0, 5));
  CHECK(comp.univalent);
  CHECK(!comp.unital);
}
