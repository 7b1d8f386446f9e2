#include "benchmark/benchmark.h"

#include "continuum/axioms.hpp"
#include "continuum/catalog.hpp"
#include "continuum/logic.hpp"
#include "continuum/nilpotent.hpp"
#include "continuum/sheaf.hpp"

using namespace continuum;

namespace {

void BM_OpensLattice4pt(benchmark::State& state) {
  const auto space = discrete_space(4);
  for (auto _ : state) {
    auto lattice = space.opens_lattice();
    benchmark::DoNotOptimize(lattice);
  }
}
BENCHMARK(BM_OpensLattice4pt);

void BM_RegionImplies(benchmark::State& state) {
  RegionSampler sampler(1);
  std::vector<OpenRegion> regions;
  for (int i = 0; i < 64; ++i) regions.push_back(sampler.next_nonempty());
  std::size_t i = 0;
  for (auto _ : state) {
    auto r = region_implies(regions[i % 64], regions[(i + 1) % 64]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_RegionImplies);

void BM_DivisibilityLine(benchmark::State& state) {
  RegionSampler sampler(2);
  std::vector<OpenRegion> samples;
  for (int i = 0; i < 16; ++i) samples.push_back(sampler.next_nonempty());
  for (auto _ : state) {
    auto rep = check_divisibility_line(samples);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_DivisibilityLine);

void BM_SheafCheckBoolean(benchmark::State& state) {
  // product sheaf over the discrete 2-point space
  const auto space = discrete_space(2);
  std::vector<std::vector<std::string>> sections{
      {"*"}, {"a0", "a1"}, {"b0", "b1"}, {"a0b0", "a0b1", "a1b0", "a1b1"}};
  std::map<std::pair<int, int>, std::map<std::string, std::string>> restrictions;
  restrictions[{1, 0}] = {{"a0", "*"}, {"a1", "*"}};
  restrictions[{2, 0}] = {{"b0", "*"}, {"b1", "*"}};
  restrictions[{3, 1}] = {{"a0b0", "a0"}, {"a0b1", "a0"}, {"a1b0", "a1"}, {"a1b1", "a1"}};
  restrictions[{3, 2}] = {{"a0b0", "b0"}, {"a0b1", "b1"}, {"a1b0", "b0"}, {"a1b1", "b1"}};
  const auto p = Presheaf::build(space, sections, restrictions);
  for (auto _ : state) {
    auto verdict = check_sheaf(p);
    benchmark::DoNotOptimize(verdict);
  }
}
BENCHMARK(BM_SheafCheckBoolean);

void BM_CountermodelSearch(benchmark::State& state) {
  const auto peirce = parse_formula("((p -> q) -> p) -> p");
  for (auto _ : state) {
    auto counter = find_countermodel(*peirce, 5);
    benchmark::DoNotOptimize(counter);
  }
}
BENCHMARK(BM_CountermodelSearch);

void BM_LiftDegree8(benchmark::State& state) {
  std::vector<Rat> coeffs;
  for (int i = 0; i <= 8; ++i) coeffs.push_back(rat(i + 1, 3));
  const Poly f(std::move(coeffs));
  for (auto _ : state) {
    auto lifted = lift_and_eval(f, rat(22, 7), 6);
    benchmark::DoNotOptimize(lifted);
  }
}
BENCHMARK(BM_LiftDegree8);

}  // namespace
