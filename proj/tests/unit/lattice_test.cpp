#include <doctest.h>

#include "continuum/catalog.hpp"
#include "continuum/lattice.hpp"
#include "test_helpers.hpp"

using namespace continuum;

namespace {

HeytingAlgebra three_chain() {
  return HeytingAlgebra::build({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}});
}

}  // namespace

TEST_CASE("chain and diamond build; pentagon is rejected") {
  const auto chain = three_chain();
  CHECK(chain.size() == 3);
  CHECK(chain.name(chain.top()) == "1");
  CHECK(chain.name(chain.bottom()) == "0");

  const auto m2 = diamond();
  const int x = m2.index_of("x"), y = m2.index_of("y");
  CHECK(m2.meet(x, y) == m2.bottom());
  CHECK(m2.join(x, y) == m2.top());

  // N5: 0 < a < b < 1, 0 < c < 1 with c incomparable to a,b.
  CHECK_THROWS_AS(HeytingAlgebra::build(
                      {"0", "a", "b", "c", "1"},
                      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}),
                  NotDistributive);
}

TEST_CASE("build rejects cycles, missing bounds, unknown elements") {
  CHECK_THROWS_AS(HeytingAlgebra::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}), NotAPartialOrder);
  // two incomparable elements alone have no meet/join
  CHECK_THROWS_AS(HeytingAlgebra::build({"a", "b"}, {}), NotALattice);
  CHECK_THROWS_AS(HeytingAlgebra::build({"a"}, {{"a", "z"}}), UnknownElement);
  CHECK_THROWS_AS(three_chain().index_of("nope"), UnknownElement);
}

TEST_CASE("meet/join on the 3-chain and the diamond") {
  const auto c = three_chain();
  const int zero = c.index_of("0"), a = c.index_of("a"), one = c.index_of("1");
  CHECK(c.meet(a, one) == a);
  CHECK(c.join(a, zero) == a);
  for (int u = 0; u < c.size(); ++u) CHECK(c.meet(u, c.top()) == u);
}

TEST_CASE("implication and pseudo-complement agree with the brute-force oracle") {
  const auto c = three_chain();
  const int zero = c.index_of("0"), a = c.index_of("a"), one = c.index_of("1");
  CHECK(c.implies(a, zero) == zero);
  CHECK(c.implies(zero, a) == one);
  CHECK(c.implies(one, a) == a);
  CHECK(c.pseudo_complement(a) == zero);
  CHECK(c.pseudo_complement(zero) == one);
  CHECK(c.pseudo_complement(c.top()) == c.bottom());

  const auto m2 = diamond();
  const int x = m2.index_of("x"), y = m2.index_of("y");
  CHECK(m2.implies(x, y) == y);
  CHECK(m2.pseudo_complement(x) == y);

  for (const auto& [name, alg] : catalog_algebras(8)) {
    INFO("algebra ", name);
    for (int u = 0; u < alg.size(); ++u) {
      for (int v = 0; v < alg.size(); ++v)
        REQUIRE(alg.implies(u, v) == testutil::brute_implies(alg, u, v));
      CHECK(alg.implies(u, u) == alg.top());
    }
  }
}

TEST_CASE("adjunction holds exhaustively on every catalogued algebra up to size 8") {
  for (const auto& [name, alg] : catalog_algebras(8)) {
    INFO("algebra ", name);
    for (int w = 0; w < alg.size(); ++w)
      for (int u = 0; u < alg.size(); ++u)
        for (int v = 0; v < alg.size(); ++v)
          REQUIRE(alg.leq(w, alg.implies(u, v)) == alg.leq(alg.meet(w, u), v));
  }
}

TEST_CASE("lattice identities: commutative, associative, idempotent, absorptive") {
  for (const auto& [name, alg] : catalog_algebras(6)) {
    INFO("algebra ", name);
    for (int u = 0; u < alg.size(); ++u) {
      CHECK(alg.meet(u, u) == u);
      CHECK(alg.join(u, u) == u);
      for (int v = 0; v < alg.size(); ++v) {
        CHECK(alg.meet(u, v) == alg.meet(v, u));
        CHECK(alg.join(u, v) == alg.join(v, u));
        CHECK(alg.meet(u, alg.join(u, v)) == u);
        CHECK(alg.join(u, alg.meet(u, v)) == u);
        for (int w = 0; w < alg.size(); ++w) {
          CHECK(alg.meet(alg.meet(u, v), w) == alg.meet(u, alg.meet(v, w)));
          CHECK(alg.join(alg.join(u, v), w) == alg.join(u, alg.join(v, w)));
        }
      }
    }
  }
}

TEST_CASE("triple negation collapses; implies(u,v)=top iff u<=v") {
  for (const auto& [name, alg] : catalog_algebras(8)) {
    INFO("algebra ", name);
    for (int u = 0; u < alg.size(); ++u) {
      const int nu = alg.pseudo_complement(u);
      CHECK(alg.pseudo_complement(alg.pseudo_complement(nu)) == nu);
      for (int v = 0; v < alg.size(); ++v)
        CHECK((alg.implies(u, v) == alg.top()) == alg.leq(u, v));
    }
  }
}

TEST_CASE("is_boolean detects exactly the powersets among the catalog") {
  CHECK(is_boolean(boolean_algebra(0)));
  CHECK(is_boolean(boolean_algebra(1)));
  CHECK(is_boolean(diamond()));
  CHECK(is_boolean(boolean_algebra(3)));
  CHECK(!is_boolean(three_chain()));
  CHECK(!is_boolean(chain_algebra(4)));
}

TEST_CASE("declared top/bottom are verified") {
  CHECK_THROWS_AS(HeytingAlgebra::build({"0", "1"}, {{"0", "1"}}, "0", std::nullopt), Error);
  const auto a = HeytingAlgebra::build({"0", "1"}, {{"0", "1"}}, "1", "0");
  CHECK(a.name(a.top()) == "1");
}

TEST_CASE("cover_pairs returns the transitive reduction") {
  const auto c = chain_algebra(4);
  const auto covers = c.cover_pairs();
  CHECK(covers.size() == 3);  // 0-a, a-b, b-1
  for (const auto& [lo, hi] : covers) CHECK(lo != hi);
}
