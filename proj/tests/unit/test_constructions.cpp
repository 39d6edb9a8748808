#include <doctest.h>

#include "test_support.hpp"

using namespace updown;
using namespace testsupport;

TEST_CASE("the square of the segment category is the poset of subsets of a pair") {
  const UpdownTable a = segment_table(2);
  const UpdownTable square = product(a, a);
  CHECK(square.object_count() == 4);
  CHECK(square.rank_size(1) == 2);
  for (std::size_t r = 0; r <= 2; ++r) {
    for (const auto& rec : square.rank(r)) {
      CHECK(rec.aut_order == 1);
      for (const auto& e : square.covers(rec.id)) CHECK(e.hom_size == 1);
    }
  }
  const ClassificationFlags flags = classify(square);
  CHECK(flags.unital);
  CHECK(flags.factorial);

  const RationalSeries o = object_gf(square, 2);
  CHECK(o[0] == 1);
  CHECK(o[1] == 2);
  CHECK(o[2] == 1);
}

TEST_CASE("product automorphism orders multiply") {
  const UpdownTable s = family(Family::base_s, 0, 3);
  const UpdownTable square = product(s, s);
  const ObjectId pair21 = by_label(square, 3, "([2]|[1])");
  CHECK(square.aut(pair21) == 2);
  CHECK(classify(square).factorial);  // factorial closure under products
}

TEST_CASE("product generating functions factor") {
  const UpdownTable neck = family(Family::necklaces, 2, 6);
  const UpdownTable comp = family(Family::compositions, 0, 6);
  const UpdownTable prod = product(neck, comp);
  const RationalSeries o = object_gf(prod, 6);
  const RationalSeries expected_o = mul(object_gf(neck, 6), object_gf(comp, 6));
  for (std::size_t k = 0; k <= 6; ++k) CHECK(o[k] == expected_o[k]);

  const RationalSeries m = morphism_gf(prod, 11);
  const RationalSeries mn = morphism_gf(neck, 11);
  const RationalSeries mc = morphism_gf(comp, 11);
  auto at_t2 = [](const RationalSeries& s, std::size_t order) {
    return compose(truncate(s, order), shift_up(RationalSeries::t(order)));
  };
  const RationalSeries expected_m = add(mul(mn, at_t2(object_gf(comp, 5), 11)),
                                        mul(at_t2(object_gf(neck, 5), 11), mc));
  for (std::size_t k = 0; k <= 11; ++k) CHECK(m[k] == expected_m[k]);
}

TEST_CASE("n-fold powers have the documented morphism series") {
  // M of the n-th power is n M O(t^2)^(n-1).
  const UpdownTable subsets3 = family(Family::subsets, 3, 3);
  const RationalSeries m = morphism_gf(subsets3, 5);
  const GeneratingPair a = reference_gf(Family::subsets, 1, 5);  // the segment itself
  auto at_t2 = [](const RationalSeries& s, std::size_t order) {
    return compose(truncate(s, order), shift_up(RationalSeries::t(order)));
  };
  const RationalSeries expected =
      scale(3, mul(a.morphism, pow(at_t2(truncate(a.object, 2), 5), 2)));
  for (std::size_t k = 0; k <= 5; ++k) CHECK(m[k] == expected[k]);
}

TEST_CASE("quotients collapse automorphisms onto the chosen multiplicity") {
  const UpdownTable kingman = family(Family::partitions_kingman, 0, 5);
  const UpdownTable up = up_quotient(kingman);
  const UpdownTable dn = dn_quotient(kingman);
  for (std::size_t r = 0; r <= 5; ++r) {
    for (const auto& rec : up.rank(r)) {
      CHECK(rec.aut_order == 1);
      for (const auto& e : up.covers(rec.id)) {
        CHECK(e.hom_size == kingman.edge(e.src, e.dst)->u);
      }
    }
    for (const auto& rec : dn.rank(r)) {
      for (const auto& e : dn.covers(rec.id)) {
        CHECK(e.hom_size == kingman.edge(e.src, e.dst)->d);
      }
    }
  }

  // Idempotent on univalent input.
  const UpdownTable young = family(Family::partitions_unit, 0, 5);
  CHECK(structurally_equal(up_quotient(young), young));
  CHECK(structurally_equal(dn_quotient(young), young));
}

TEST_CASE("down quotient composes the deletion factors") {
  const UpdownTable mono = family(Family::monomials, 2, 3);
  const UpdownTable dn = dn_quotient(mono);
  for (const auto& rec : dn.rank(2)) {
    const ExtMult m = ext_mult(dn, {0, 0}, rec.id);
    CHECK(m.u == 2);  // 2! decorated deletion orders per rank-2 monomial
  }
}

TEST_CASE("quotients preserve even covering and commute with products") {
  const UpdownTable graphs = family(Family::graphs, 0, 4);
  const ClassificationFlags base = classify(graphs);
  const ClassificationFlags up = classify(up_quotient(graphs));
  REQUIRE(base.evenly_up);
  CHECK(up.evenly_up);
  CHECK(up.up_seq == base.up_seq);
  const ClassificationFlags dn = classify(dn_quotient(graphs));
  REQUIRE(base.evenly_down);
  CHECK(dn.evenly_down);
  CHECK(dn.down_seq == base.down_seq);

  const UpdownTable neck = family(Family::necklaces, 2, 4);
  const UpdownTable mono = family(Family::monomials, 2, 4);
  CHECK(structurally_equal(up_quotient(product(neck, mono)),
                           product(up_quotient(neck), up_quotient(mono))));
  CHECK(structurally_equal(dn_quotient(product(neck, mono)),
                           product(dn_quotient(neck), dn_quotient(mono))));
}

TEST_CASE("weighted poset export carries the covering hom sizes") {
  const UpdownTable young = family(Family::partitions_unit, 0, 4);
  const WeightedPoset wy = wrp_export(young);
  for (const auto& cover : wy.covers) CHECK(cover.weight == 1);

  const UpdownTable comp = family(Family::compositions, 0, 3);
  const WeightedPoset wc = wrp_export(comp);
  const ObjectId one = by_label(comp, 1, "(1)");
  const ObjectId oneone = by_label(comp, 2, "(1,1)");
  bool found = false;
  for (const auto& cover : wc.covers) {
    if (cover.src == one && cover.dst == oneone) {
      CHECK(cover.weight == 2);
      found = true;
    }
  }
  CHECK(found);

  const UpdownTable planar = family(Family::planar_trees, 0, 4);
  const WeightedPoset wp = wrp_export(planar);
  for (std::size_t r = 0; r < 4; ++r) {
    for (const auto& rec : planar.rank(r)) {
      std::uint64_t sum = 0;
      for (const auto& cover : wp.covers) {
        if (cover.src == rec.id) sum += cover.weight;
      }
      CHECK(sum == 2 * r + 1);
    }
  }

  CHECK_THROWS_AS(wrp_export(family(Family::partitions_kingman, 0, 3)), NotUnivalent);
}

TEST_CASE("exported weights satisfy the chain composition law") {
  const UpdownTable comp = family(Family::compositions, 0, 5);
  // n(x,y) for |y| = |x|+2 via both one intermediate rank and ext_mult.
  for (const auto& xrec : comp.rank(1)) {
    for (const auto& yrec : comp.rank(3)) {
      Int via_middle = 0;
      for (const auto& zrec : comp.rank(2)) {
        const CoverEdge* first = comp.edge(xrec.id, zrec.id);
        const CoverEdge* second = comp.edge(zrec.id, yrec.id);
        if (first && second) via_middle += Int(first->hom_size) * second->hom_size;
      }
      CHECK(via_middle == ext_mult(comp, xrec.id, yrec.id).u);
    }
  }
}

TEST_CASE("universal cover unfolds level by level") {
  const UpdownTable planar = family(Family::planar_trees, 0, 4);
  const CoverTable cover = universal_cover(planar, 4);
  CHECK(cover.level_size(0) == 1);
  CHECK(cover.level_size(1) == 1);
  CHECK(cover.level_size(2) == 3);
  CHECK(cover.level_size(3) == 15);
  CHECK(cover.level_size(4) == 105);
  CHECK(classify(cover.table()).simple);

  const UpdownTable young = family(Family::partitions_unit, 0, 3);
  const CoverTable ycover = universal_cover(young, 3);
  CHECK(ycover.level_size(0) == 1);
  CHECK(ycover.level_size(1) == 1);
  CHECK(ycover.level_size(2) == 2);
  CHECK(ycover.level_size(3) == 4);

  const UpdownTable mono = up_quotient(family(Family::monomials, 2, 3));
  const CoverTable mcover = universal_cover(mono, 3);
  CHECK(fiber_count(mcover, by_label(mono, 3, "[2,1]")) == 3);

  CHECK_THROWS_AS(universal_cover(family(Family::partitions_kingman, 0, 3), 3), NotUnivalent);
  CHECK_THROWS_AS(universal_cover(young, 9), OrderExceedsTable);
  CHECK_THROWS_AS(universal_cover(planar, 4, 50), BudgetExceeded);
}

TEST_CASE("cover paths decorate chains and project to their endpoints") {
  const UpdownTable comp = family(Family::compositions, 0, 4);
  const CoverTable cover = universal_cover(comp, 4);
  for (std::size_t i = 0; i < cover.level_size(4); ++i) {
    const CoverPath path = cover.path({4, i});
    REQUIRE(path.steps.size() == 4);
    ObjectId previous{0, 0};
    for (std::size_t k = 0; k < path.steps.size(); ++k) {
      const CoverPathStep& step = path.steps[k];
      const CoverEdge* e = comp.edge(previous, step.object);
      REQUIRE(e != nullptr);
      CHECK(step.morphism_index >= 1);
      CHECK(step.morphism_index <= e->hom_size);
      previous = step.object;
    }
    CHECK(previous == cover.projection({4, i}));
  }
  CHECK(cover.path({0, 0}).steps.empty());
}

TEST_CASE("fibers count extended multiplicities from the root") {
  const UpdownTable dyck = family(Family::planar_trees, 0, 4);
  const CoverTable cover = universal_cover(dyck, 4);
  for (std::size_t r = 0; r <= 4; ++r) {
    for (const auto& rec : dyck.rank(r)) {
      CHECK(Int(fiber_count(cover, rec.id)) == ext_mult(dyck, {0, 0}, rec.id).u);
    }
  }
  CHECK(fiber_count(cover, {0, 0}) == 1);
  CHECK_THROWS_AS(fiber_count(cover, ObjectId{5, 0}), RankOutOfRange);

  // Factorial base: every fiber is a full set of deletion orders.
  const UpdownTable neck_dn = dn_quotient(family(Family::necklaces, 2, 4));
  const CoverTable ncover = universal_cover(neck_dn, 4);
  for (std::size_t r = 0; r <= 4; ++r) {
    for (const auto& rec : neck_dn.rank(r)) {
      CHECK(Int(fiber_count(ncover, rec.id)) == factorial(r));
    }
  }
}

TEST_CASE("covering map law: chains over an edge biject with the hom set") {
  const UpdownTable comp = family(Family::compositions, 0, 4);
  const CoverTable cover = universal_cover(comp, 4);
  const UpdownTable& ct = cover.table();
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t i = 0; i < cover.level_size(r); ++i) {
      const ObjectId base = cover.projection({r, i});
      for (const auto& e : comp.covers(base)) {
        std::uint64_t into_fiber = 0;
        for (const auto& ce : ct.covers({r, i})) {
          if (cover.projection(ce.dst) == e.dst) ++into_fiber;
        }
        CHECK(into_fiber == e.hom_size);
      }
    }
  }
}

TEST_CASE("covers of simple tables do not grow") {
  const UpdownTable young = family(Family::partitions_unit, 0, 4);
  const CoverTable once = universal_cover(young, 4);
  const CoverTable twice = universal_cover(once.table(), 4);
  for (std::size_t r = 0; r <= 4; ++r) {
    CHECK(twice.level_size(r) == once.level_size(r));
  }
}

TEST_CASE("product covers convolve binomially") {
  const UpdownTable a = segment_table(2);
  const CoverTable square_cover = universal_cover(product(a, a), 2);
  CHECK(square_cover.level_size(0) == 1);
  CHECK(square_cover.level_size(1) == 2);
  CHECK(square_cover.level_size(2) == 2);

  const UpdownTable neck_up = up_quotient(family(Family::necklaces, 2, 5));
  const UpdownTable comp = family(Family::compositions, 0, 5);
  const CoverTable lhs = universal_cover(product(neck_up, comp), 5);
  const CoverTable cn = universal_cover(neck_up, 5);
  const CoverTable cc = universal_cover(comp, 5);
  for (std::size_t n = 0; n <= 5; ++n) {
    Int expected = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      expected += binomial(n, k) * cn.level_size(k) * cc.level_size(n - k);
    }
    CHECK(Int(lhs.level_size(n)) == expected);
  }
}

TEST_CASE("evenly up-covered simple tables are isomorphic via rank induction") {
  const UpdownTable rooted_up = up_quotient(family(Family::rooted_trees, 0, 5));
  const UpdownTable binary_up = up_quotient(family(Family::binary_trees, 0, 5));
  const CoverTable cr = universal_cover(rooted_up, 5);
  const CoverTable cb = universal_cover(binary_up, 5);
  const RankBijection iso = unique_iso(cr.table(), cb.table());
  for (std::size_t r = 0; r <= 5; ++r) {
    CHECK(iso.forward[r].size() == cr.level_size(r));
  }
  // The bijection preserves covering relations.
  const UpdownTable& tr = cr.table();
  const UpdownTable& tb = cb.table();
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t i = 0; i < tr.rank_size(r); ++i) {
      for (const auto& e : tr.covers({r, i})) {
        CHECK(tb.edge({r, iso.forward[r][i]}, {r + 1, iso.forward[r + 1][e.dst.index]}) !=
              nullptr);
      }
    }
  }

  // Self-isomorphism exists and respects ranks.
  const RankBijection self = unique_iso(cr.table(), cr.table());
  for (std::size_t r = 0; r <= 5; ++r) CHECK(self.forward[r].size() == cr.level_size(r));
}

TEST_CASE("unique_iso rejects mismatched inputs") {
  const UpdownTable young = family(Family::partitions_unit, 0, 3);
  const CoverTable yc = universal_cover(young, 3);
  CHECK_THROWS_AS(unique_iso(young, yc.table()), PreconditionFailed);  // young not simple

  // u-sequences (1,...) versus (2,...): two simple trees with different fanout.
  std::vector<std::vector<ObjectSpec>> chain(2);
  chain[0].push_back({"r", 1});
  chain[1].push_back({"x", 1});
  const UpdownTable path = build_table("path", std::move(chain), {{{0, 0}, {1, 0}, 1}});
  std::vector<std::vector<ObjectSpec>> fork(2);
  fork[0].push_back({"r", 1});
  fork[1].push_back({"x", 1});
  fork[1].push_back({"y", 1});
  const UpdownTable pair = build_table(
      "fork", std::move(fork), {{{0, 0}, {1, 0}, 1}, {{0, 0}, {1, 1}, 1}});
  CHECK_THROWS_AS(unique_iso(path, pair), PreconditionFailed);
}
