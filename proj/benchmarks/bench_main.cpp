#include <benchmark/benchmark.h>

#include "tfg/belt.hpp"
#include "tfg/lamplighter.hpp"
#include "tfg/verify.hpp"
#include "tfg/witness.hpp"

using namespace tfg;

namespace {

const ShiftSpace& bin() {
  static ShiftSpace s = ShiftSpace::full(Alphabet(2));
  return s;
}

void BM_SymbolAt(benchmark::State& state) {
  Config x({0, 1}, word_from_digits("0110100110"), {1, 0, 0}, -3);
  int64_t i = -50;
  for (auto _ : state) {
    benchmark::DoNotOptimize(x.symbol_at(i));
    if (++i > 50) i = -50;
  }
}
BENCHMARK(BM_SymbolAt);

void BM_TableEval(benchmark::State& state) {
  TfgElement g = TfgElement::dial(2);
  Config x = Config::periodic(word_from_digits("0110"));
  for (auto _ : state) benchmark::DoNotOptimize(g.eval_at(x, 1));
}
BENCHMARK(BM_TableEval);

void BM_LampWalkEval(benchmark::State& state) {
  LamplighterPair lamp = build_lamplighter();
  Word center;
  for (const char* b : {"3210", "3210", "3220"}) {
    Word w = word_from_digits(b);
    center.insert(center.end(), w.begin(), w.end());
  }
  Config x({0}, center, {0}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(lamp.walk.eval_at(x, 4));
}
BENCHMARK(BM_LampWalkEval);

void BM_BeltStepEval(benchmark::State& state) {
  GraphProductSpec spec = GraphProductSpec::raag(2, {});
  auto book = std::make_shared<Codebook>(
      Codebook::generate(Alphabet(2), witness_keys(spec, {{0, 1}, {1, 1}})));
  VerifyPolicy vp = builder_verify_policy();
  TfgElement f = belt_step_element(spec, *book, 0, vp);
  WitnessWord w = build_witness(spec, {{0, 1}, {1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(f.eval_at(w.configuration, 0));
}
BENCHMARK(BM_BeltStepEval);

void BM_VerifyPi01(benchmark::State& state) {
  NodePtr rule = TfgElement::dial(2).rule();
  for (auto _ : state) benchmark::DoNotOptimize(verify_bijective(rule).ok);
}
BENCHMARK(BM_VerifyPi01);

void BM_TierEEquality(benchmark::State& state) {
  LamplighterPair lamp = build_lamplighter();
  TfgElement squared = compose(lamp.toggle, lamp.toggle);
  TfgElement id = TfgElement::identity(squared.domain());
  for (auto _ : state) benchmark::DoNotOptimize(equal(squared, id).equal);
}
BENCHMARK(BM_TierEEquality);

void BM_BuildWitnessCommutator(benchmark::State& state) {
  GraphProductSpec spec = GraphProductSpec::raag(2, {});
  std::vector<std::pair<int64_t, int64_t>> word = {{1, 1}, {0, 1}, {1, -1}, {0, -1}};
  auto book = std::make_shared<Codebook>(
      Codebook::generate(Alphabet(2), witness_keys(spec, word)));
  BeltMachines machines = BeltMachines::build(spec, book, builder_verify_policy());
  for (auto _ : state) {
    WitnessWord w = build_witness(spec, word, &machines);
    benchmark::DoNotOptimize(w.word.size());
  }
}
BENCHMARK(BM_BuildWitnessCommutator);

void BM_PeriodicSweep(benchmark::State& state) {
  TfgElement g = TfgElement::dial(2);
  for (auto _ : state) {
    int64_t acc = 0;
    sweep_periodic_points(bin(), 10, 1 << 12, 0, 0, [&](const Word& w) {
      acc += g.eval_at(Config::periodic(w), 0);
      return true;
    });
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_PeriodicSweep);

}  // namespace

BENCHMARK_MAIN();
