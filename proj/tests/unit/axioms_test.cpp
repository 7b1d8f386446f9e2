#include <doctest.h>

#include "continuum/axioms.hpp"
#include "continuum/catalog.hpp"
#include "continuum/finite_space.hpp"
#include "test_helpers.hpp"

using namespace continuum;

TEST_CASE("global connectivity: coarse holds, discrete fails, as-written degenerates") {
  const auto coarse = coarse_space(2).opens_lattice();  // 2-chain
  CHECK(check_global_connectivity(coarse, AxiomMode::corrected).holds);

  const auto disc = discrete_space(2).opens_lattice();  // Boolean 4
  const auto rep = check_global_connectivity(disc, AxiomMode::corrected);
  CHECK(!rep.holds);
  REQUIRE(rep.witness.size() == 2);
  CHECK(rep.witness[0] == "{p}");
  CHECK(rep.witness[1] == "{q}");

  for (const auto& [name, alg] : catalog_algebras(8)) {
    if (alg.size() < 2) continue;
    INFO("algebra ", name);
    const auto r = check_global_connectivity(alg, AxiomMode::as_written);
    REQUIRE(!r.holds);
    REQUIRE(r.witness.size() == 2);
    CHECK(r.witness[0] == alg.name(alg.top()));
    CHECK(r.witness[1] == alg.name(alg.bottom()));
  }
}

TEST_CASE("local connectivity holds on the worked examples in both modes") {
  for (const auto& alg : {sierpinski_space().opens_lattice(),
                          discrete_space(2).opens_lattice(), chain_algebra(2)}) {
    CHECK(check_local_connectivity(alg, AxiomMode::as_written).holds);
    CHECK(check_local_connectivity(alg, AxiomMode::corrected).holds);
  }
}

TEST_CASE("divisibility: corrected fails on the coarse 2-chain and on atoms") {
  const auto coarse = chain_algebra(2);
  const auto rep = check_divisibility(coarse, AxiomMode::corrected);
  CHECK(!rep.holds);
  REQUIRE(rep.witness.size() == 1);
  CHECK(rep.witness[0] == "1");  // the only nonzero element has no split

  const auto disc = discrete_space(2).opens_lattice();
  const auto rep2 = check_divisibility(disc, AxiomMode::corrected);
  CHECK(!rep2.holds);
  CHECK(rep2.witness[0] == "{p}");  // first atom in element order

  // every opens-lattice of a nonempty finite space has atoms, so corrected
  // divisibility fails universally
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : all_topologies(n))
      REQUIRE(!check_divisibility(s.opens_lattice(), AxiomMode::corrected).holds);
}

TEST_CASE("divisibility as written is refuted by any second element") {
  for (const auto& [name, alg] : catalog_algebras(8)) {
    INFO("algebra ", name);
    const auto rep = check_divisibility(alg, AxiomMode::as_written);
    if (alg.size() == 1) {
      CHECK(rep.holds);
    } else {
      CHECK(!rep.holds);
      REQUIRE(rep.witness.size() == 1);
    }
  }
}

TEST_CASE("corrected global connectivity iff top is a connected element") {
  for (const auto& [name, alg] : catalog_algebras(8)) {
    INFO("algebra ", name);
    REQUIRE(check_global_connectivity(alg, AxiomMode::corrected).holds ==
            is_connected_element(alg, alg.top()));
  }
}

TEST_CASE("line divisibility: worked samples") {
  const auto unit = OpenRegion::segment(rat(0), rat(1));
  auto rep = check_divisibility_line({unit});
  CHECK(rep.holds);

  rep = check_divisibility_line({OpenRegion::whole_line()});
  CHECK(rep.holds);

  CHECK_THROWS_AS(check_divisibility_line({OpenRegion()}), EmptySampleRegion);
}

TEST_CASE("line divisibility on 1000 sampled regions, with scaling invariance") {
  RegionSampler sampler(0);
  std::vector<OpenRegion> samples;
  for (int i = 0; i < 1000; ++i) samples.push_back(sampler.next_nonempty());
  const auto rep = check_divisibility_line(samples);
  CHECK(rep.holds);

  std::vector<OpenRegion> doubled;
  for (const auto& u : samples) doubled.push_back(region_scale(u, rat(2)));
  CHECK(check_divisibility_line(doubled).holds == rep.holds);
}

TEST_CASE("report invariants: witness present whenever holds is false") {
  for (const auto& [name, alg] : catalog_algebras(6)) {
    for (const AxiomMode mode : {AxiomMode::as_written, AxiomMode::corrected}) {
      for (const auto& rep :
           {check_global_connectivity(alg, mode), check_local_connectivity(alg, mode),
            check_divisibility(alg, mode)}) {
        if (!rep.holds) REQUIRE(!rep.witness.empty());
        for (const auto& w : rep.witness) {
          INFO("witness ", w, " in ", name);
          REQUIRE_NOTHROW(alg.index_of(w));
        }
      }
    }
  }
}
