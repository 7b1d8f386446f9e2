#include <doctest.h>

#include <random>

#include "continuum/axioms.hpp"
#include "continuum/region.hpp"
#include "test_helpers.hpp"

using namespace continuum;

namespace {

OpenRegion seg(long lo_n, long lo_d, long hi_n, long hi_d) {
  return OpenRegion::segment(rat(lo_n, lo_d), rat(hi_n, hi_d));
}

}  // namespace

TEST_CASE("normalization merges overlaps but keeps adjacent intervals apart") {
  const auto merged = OpenRegion::of({{Bound::at(rat(0)), Bound::at(rat(2))},
                                      {Bound::at(rat(1)), Bound::at(rat(3))}});
  CHECK(merged.intervals().size() == 1);
  CHECK(merged == seg(0, 1, 3, 1));

  // (0,1) ∪ (1,2): the shared endpoint 1 is not in the set
  const auto adjacent = region_join(seg(0, 1, 1, 1), seg(1, 1, 2, 1));
  CHECK(adjacent.intervals().size() == 2);
  CHECK(!adjacent.contains(rat(1)));

  CHECK_THROWS_AS(OpenRegion::of({{Bound::at(rat(1)), Bound::at(rat(1))}}), MalformedRegion);
  CHECK_THROWS_AS(OpenRegion::of({{Bound::at(rat(2)), Bound::at(rat(1))}}), MalformedRegion);
  CHECK_THROWS_AS(OpenRegion::of({{Bound::pos_inf(), Bound::neg_inf()}}), MalformedRegion);
}

TEST_CASE("meet, not, join reproduce the worked examples") {
  CHECK(region_meet(seg(0, 1, 2, 1), seg(1, 1, 3, 1)) == seg(1, 1, 2, 1));

  const auto u = seg(0, 1, 1, 1);
  const auto nu = region_not(u);
  REQUIRE(nu.intervals().size() == 2);
  CHECK(nu.intervals()[0].lo.kind() == Bound::Kind::neg_inf);
  CHECK(nu.intervals()[0].hi == Bound::at(rat(0)));
  CHECK(nu.intervals()[1].lo == Bound::at(rat(1)));
  CHECK(nu.intervals()[1].hi.kind() == Bound::Kind::pos_inf);

  // excluded middle fails: u ∨ ¬u misses the two boundary points
  const auto lem = region_join(u, nu);
  CHECK(lem != OpenRegion::whole_line());
  CHECK(lem.intervals().size() == 3);
  CHECK(!lem.contains(rat(0)));
  CHECK(!lem.contains(rat(1)));

  CHECK(region_not(OpenRegion()) == OpenRegion::whole_line());
  CHECK(region_not(OpenRegion::whole_line()) == OpenRegion());
}

TEST_CASE("implies is the interior of complement-union; not is implies-bottom") {
  CHECK(region_implies(seg(0, 1, 1, 1), seg(0, 1, 1, 1)) == OpenRegion::whole_line());
  CHECK(region_implies(OpenRegion(), seg(0, 1, 1, 1)) == OpenRegion::whole_line());
  // (0,2) -> (0,1) = (-inf,1) ∪ (2,+inf): inside (0,2) only (0,1) stays
  const auto imp = region_implies(seg(0, 1, 2, 1), seg(0, 1, 1, 1));
  REQUIRE(imp.intervals().size() == 2);
  CHECK(imp.intervals()[0].hi == Bound::at(rat(1)));
  CHECK(imp.intervals()[1].lo == Bound::at(rat(2)));

  std::mt19937_64 rng(7);
  RegionSampler sampler(11);
  for (int i = 0; i < 2000; ++i) {
    const auto u = sampler.next_nonempty();
    CHECK(region_implies(u, OpenRegion()) == region_not(u));
  }
}

TEST_CASE("region_boundary lists the finite endpoints") {
  auto b = region_boundary(seg(0, 1, 1, 1));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == 0);
  CHECK(b[1] == 1);

  b = region_boundary(region_join(seg(0, 1, 1, 1), seg(1, 1, 2, 1)));
  REQUIRE(b.size() == 3);
  CHECK(b[1] == 1);

  CHECK(region_boundary(OpenRegion::whole_line()).empty());
}

TEST_CASE("divide splits at interior points only") {
  const auto [w, v] = divide(seg(0, 1, 1, 1), rat(1, 2));
  CHECK(w == seg(0, 1, 1, 2));
  CHECK(v == seg(1, 2, 1, 1));

  const auto u2 = region_join(seg(0, 1, 1, 1), seg(2, 1, 3, 1));
  const auto [w2, v2] = divide(u2, rat(5, 2));
  CHECK(w2 == region_join(seg(0, 1, 1, 1), seg(2, 1, 5, 2)));
  CHECK(v2 == seg(5, 2, 3, 1));

  CHECK_THROWS_AS(divide(seg(0, 1, 1, 1), rat(2)), PointNotInteriorToRegion);
  CHECK_THROWS_AS(divide(seg(0, 1, 1, 1), rat(1)), PointNotInteriorToRegion);
}

TEST_CASE("compact complement iff both rays are present") {
  CHECK(is_compact_complement(region_join(
      OpenRegion::of({{Bound::neg_inf(), Bound::at(rat(0))}}),
      OpenRegion::of({{Bound::at(rat(1)), Bound::pos_inf()}}))));
  CHECK(!is_compact_complement(OpenRegion::of({{Bound::at(rat(0)), Bound::pos_inf()}})));
  CHECK(is_compact_complement(OpenRegion::whole_line()));
  CHECK(!is_compact_complement(OpenRegion()));
}

TEST_CASE("frame laws on sampled regions") {
  RegionSampler sampler(42);
  for (int i = 0; i < 10000; ++i) {
    const auto u = sampler.next_nonempty();
    const auto v = sampler.next_nonempty();
    const auto w = sampler.next_nonempty();

    REQUIRE(region_meet(u, v) == region_meet(v, u));
    REQUIRE(region_join(u, v) == region_join(v, u));
    REQUIRE(region_meet(region_meet(u, v), w) == region_meet(u, region_meet(v, w)));
    REQUIRE(region_join(region_join(u, v), w) == region_join(u, region_join(v, w)));
    REQUIRE(region_meet(u, region_join(u, v)) == u);
    REQUIRE(region_join(u, region_meet(u, v)) == u);

    // adjunction: w ⊆ (u -> v) iff w ∩ u ⊆ v
    const auto imp = region_implies(u, v);
    REQUIRE((region_meet(w, imp) == w) == (region_meet(region_meet(w, u), v) == region_meet(w, u)));

    // triple negation
    const auto nu = region_not(u);
    REQUIRE(region_not(region_not(nu)) == nu);
  }
}

TEST_CASE("divide yields disjoint dense halves on sampled regions") {
  RegionSampler sampler(3);
  for (int i = 0; i < 1000; ++i) {
    const auto u = sampler.next_nonempty();
    const Rat cut = interval_probe_point(u.intervals().front());
    const auto [w, v] = divide(u, cut);
    REQUIRE(!w.empty());
    REQUIRE(!v.empty());
    REQUIRE(region_meet(w, v).empty());
    REQUIRE(check_divisibility_line({u}).holds);
  }
}

TEST_CASE("scaling by 2 preserves structure") {
  const auto u = region_join(seg(0, 1, 1, 1), seg(3, 1, 4, 1));
  const auto scaled = region_scale(u, rat(2));
  CHECK(scaled == region_join(seg(0, 1, 2, 1), seg(6, 1, 8, 1)));
  CHECK(scaled.intervals().size() == u.intervals().size());
}
