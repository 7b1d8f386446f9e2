#include <doctest.h>

#include <random>

#include "continuum/catalog.hpp"
#include "continuum/finite_space.hpp"
#include "continuum/logic.hpp"
#include "test_helpers.hpp"

using namespace continuum;

namespace {

FormulaPtr random_formula(std::mt19937_64& rng, int depth = 0) {
  const std::vector<std::string> atoms{"p", "q", "r"};
  const std::uint64_t pick = rng() % (depth > 4 ? 3 : 8);
  switch (pick) {
    case 0: return Formula::make_atom(atoms[rng() % atoms.size()]);
    case 1: return Formula::make_top();
    case 2: return Formula::make_bot();
    case 3: return Formula::make_neg(random_formula(rng, depth + 1));
    case 4: return Formula::make_conj(random_formula(rng, depth + 1), random_formula(rng, depth + 1));
    case 5: return Formula::make_disj(random_formula(rng, depth + 1), random_formula(rng, depth + 1));
    default:
      return Formula::make_impl(random_formula(rng, depth + 1), random_formula(rng, depth + 1));
  }
}

const std::vector<std::string> kIntuitionistic{
    "p -> p",
    "p -> (q -> p)",
    "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
    "~(p & ~p)",
    "(~~~p -> ~p) & (~p -> ~~~p)",
};

const std::vector<std::string> kClassicalOnly{
    "p | ~p",
    "~~p -> p",
    "((p -> q) -> p) -> p",
};

}  // namespace

TEST_CASE("parser: shapes, precedence, associativity") {
  const auto f = parse_formula("~(p & ~p)");
  REQUIRE(f->kind == Formula::Kind::impl);  // negation is sugar for -> bot
  CHECK(f->rhs->kind == Formula::Kind::bot);
  CHECK(f->lhs->kind == Formula::Kind::conj);

  const auto imp = parse_formula("p -> q -> r");
  REQUIRE(imp->kind == Formula::Kind::impl);
  CHECK(imp->lhs->kind == Formula::Kind::atom);
  CHECK(imp->rhs->kind == Formula::Kind::impl);  // right-associative

  const auto mixed = parse_formula("~p & q | r -> top");
  REQUIRE(mixed->kind == Formula::Kind::impl);
  CHECK(mixed->lhs->kind == Formula::Kind::disj);
  CHECK(mixed->lhs->lhs->kind == Formula::Kind::conj);

  CHECK(parse_formula("top")->kind == Formula::Kind::top);
  CHECK(formula_atoms(*parse_formula("q & p | p_1")) ==
        std::vector<std::string>{"p", "p_1", "q"});
}

TEST_CASE("parser: error positions") {
  try {
    parse_formula("p & | q");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset == 4);
  }
  CHECK_THROWS_AS(parse_formula("(p"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p q"), SyntaxError);
  CHECK_THROWS_AS(parse_formula(""), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p ->"), SyntaxError);
}

TEST_CASE("printer round-trips random formulas through the parser") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    const auto f = random_formula(rng);
    const std::string text = format_formula(*f);
    const auto reparsed = parse_formula(text);
    INFO("printed: ", text);
    REQUIRE(formula_equal(*f, *reparsed));
  }
}

TEST_CASE("eval in the Sierpinski opens-lattice: excluded middle fails locally") {
  const auto alg = sierpinski_space().opens_lattice();
  const std::map<std::string, int> val{{"p", alg.index_of("{p}")}};
  const int value = eval_formula(*parse_formula("p | ~p"), alg, val);
  CHECK(value == alg.index_of("{p}"));
  CHECK(value != alg.top());

  CHECK(eval_formula(*parse_formula("p -> p"), alg, val) == alg.top());
  CHECK_THROWS_AS(eval_formula(*parse_formula("p & z"), alg, val), UnassignedAtom);
}

TEST_CASE("eval in the line frame: localized truth") {
  std::map<std::string, OpenRegion> val;
  val["black"] = OpenRegion::segment(rat(0), rat(1));
  val["white"] = OpenRegion::segment(rat(1), rat(2));
  // nowhere both, yet each is somewhere true
  CHECK(eval_formula(*parse_formula("black & white"), val).empty());
  CHECK(!val["black"].empty());
  CHECK(!val["white"].empty());
  CHECK(eval_formula(*parse_formula("black -> black"), val) == OpenRegion::whole_line());
}

TEST_CASE("validity: intuitionistic suite valid in all catalogued algebras up to size 6") {
  for (const auto& text : kIntuitionistic) {
    const auto f = parse_formula(text);
    for (const auto& [name, alg] : catalog_algebras(6)) {
      INFO(text, " in ", name);
      REQUIRE(is_valid(*f, alg).valid);
    }
  }
}

TEST_CASE("validity: intuitionistic suite evaluates to top on random line valuations") {
  RegionSampler sampler(6);
  for (const auto& text : kIntuitionistic) {
    const auto f = parse_formula(text);
    const auto atoms = formula_atoms(*f);
    for (int i = 0; i < 1000; ++i) {
      std::map<std::string, OpenRegion> val;
      for (const auto& atom : atoms) val[atom] = sampler.next_nonempty();
      REQUIRE(eval_formula(*f, val).is_whole_line());
    }
  }
}

TEST_CASE("classical-only suite: countermodels of size <= 3 and collapse on Boolean algebras") {
  for (const auto& text : kClassicalOnly) {
    const auto f = parse_formula(text);
    const auto counter = find_countermodel(*f, 5);
    REQUIRE(counter.has_value());
    CHECK(counter->algebra.size() <= 3);
    // the countervaluation really refutes the formula
    CHECK(eval_formula(*f, counter->algebra, counter->valuation) != counter->algebra.top());

    CHECK(is_valid(*f, boolean_algebra(2)).valid);
    CHECK(is_valid(*f, boolean_algebra(3)).valid);
  }
}

TEST_CASE("worked validity examples on the 3-chain") {
  const auto chain = chain_algebra(3);
  const auto lem = is_valid(*parse_formula("p | ~p"), chain);
  REQUIRE(!lem.valid);
  CHECK(lem.countervaluation.at("p") == chain.index_of("a"));

  const auto peirce = is_valid(*parse_formula("((p -> q) -> p) -> p"), chain);
  REQUIRE(!peirce.valid);
  CHECK(peirce.countervaluation.at("p") == chain.index_of("a"));
  CHECK(peirce.countervaluation.at("q") == chain.index_of("0"));

  CHECK(!find_countermodel(*parse_formula("~~p -> p"), 5)->valuation.empty());
  CHECK(!find_countermodel(*parse_formula("p -> p"), 5).has_value());
}

TEST_CASE("monotonicity in positive positions on the line frame") {
  RegionSampler sampler(21);
  const auto f = parse_formula("(q -> p) & (p | r)");  // p occurs only positively
  for (int i = 0; i < 500; ++i) {
    std::map<std::string, OpenRegion> val;
    val["p"] = sampler.next_nonempty();
    val["q"] = sampler.next_nonempty();
    val["r"] = sampler.next_nonempty();
    const auto before = eval_formula(*f, val);
    auto enlarged = val;
    enlarged["p"] = region_join(val["p"], sampler.next_nonempty());
    const auto after = eval_formula(*f, enlarged);
    REQUIRE(region_meet(before, after) == before);  // before ⊆ after
  }
}

TEST_CASE("validity budget guard") {
  const auto f = parse_formula("a1 & a2 & a3 & a4 & a5 & a6 & a7 & a8 & a9 & a10");
  CHECK_THROWS_AS(is_valid(*f, boolean_algebra(3), 1000), TooManyAtoms);
}
