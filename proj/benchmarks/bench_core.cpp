#include <benchmark/benchmark.h>

#include <random>

#include "ssw/momentum.hpp"
#include "ssw/net.hpp"
#include "ssw/subspace.hpp"

namespace {

using namespace ssw;

void BM_HermitianFunctions(benchmark::State& state) {
  const Index n = state.range(0);
  std::mt19937_64 rng(1);
  ComplexMatrix x = random_hermitian(n, rng);
  x += (x.norm() + 1.0) * ComplexMatrix::Identity(n, n);
  for (auto _ : state) {
    ComplexMatrix r = hermitian_power_it(x, 0.7);
    benchmark::DoNotOptimize(r.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_HermitianFunctions)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_StandardSubspaceRoundTrip(benchmark::State& state) {
  const Index n = state.range(0);
  std::mt19937_64 rng(2);
  StandardSubspace h = random_standard_subspace(n, rng);
  for (auto _ : state) {
    StandardSubspace back = StandardSubspace::from_involution(h.tomita());
    benchmark::DoNotOptimize(back.modular().data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_StandardSubspaceRoundTrip)->RangeMultiplier(2)->Range(4, 16)->Complexity();

void BM_CoveringMap(benchmark::State& state) {
  std::mt19937_64 rng(3);
  SL2Element a = random_sl2(rng);
  for (auto _ : state) {
    LorentzMatrix l = covering_map(a);
    benchmark::DoNotOptimize(l.m.data());
  }
}
BENCHMARK(BM_CoveringMap);

OrbitModelSpec bench_model_spec(int angle, int rap) {
  OrbitModelSpec spec;
  spec.masses = {1.0};
  spec.orbits = {{1.0, angle, rap}};
  spec.rapidity_step = 3.0;
  spec.elements = {ElementSpec::boost_step(), ElementSpec::rotation_step(),
                   ElementSpec::reflection(),
                   ElementSpec::translate(FourVector(0.73, 0.19, -0.41, 0.23)),
                   ElementSpec::translate(FourVector(0.11, -0.57, 0.33, 0.61))};
  return spec;
}

void BM_OrbitModelBuild(benchmark::State& state) {
  OrbitModelSpec spec = bench_model_spec(int(state.range(0)), 7);
  for (auto _ : state) {
    OrbitModel model = OrbitModel::build(spec);
    benchmark::DoNotOptimize(model.dim());
  }
}
BENCHMARK(BM_OrbitModelBuild)->Arg(4)->Arg(8);

void BM_McCheck(benchmark::State& state) {
  OrbitModel model = OrbitModel::build(bench_model_spec(int(state.range(0)), 7));
  std::vector<ComplexMatrix> gens = model.registered_unitaries();
  ComplexMatrix r = model.reflection_unitary();
  for (auto _ : state) {
    McReport rep = mc_check(gens, r, 1e-9);
    benchmark::DoNotOptimize(rep.commutant_dim);
  }
  state.SetLabel("dim " + std::to_string(model.dim()));
}
BENCHMARK(BM_McCheck)->Arg(4)->Arg(8);

void BM_CommutantStrategies(benchmark::State& state) {
  const Index block = 4;
  std::mt19937_64 rng(5);
  ComplexMatrix u1 = random_unitary(block, rng), u2 = random_unitary(block, rng);
  Index d = 2 * block;
  ComplexMatrix g1 = ComplexMatrix::Zero(d, d), g2 = ComplexMatrix::Zero(d, d);
  g1.block(0, 0, block, block) = u1;
  g1.block(block, block, block, block) = u1;
  g2.block(0, 0, block, block) = u2;
  g2.block(block, block, block, block) = u2;
  CommutantStrategy strategy =
      state.range(0) == 0 ? CommutantStrategy::Dense : CommutantStrategy::Reduced;
  for (auto _ : state) {
    CommutantResult res = commutant_basis({g1, g2}, 1e-9, strategy);
    benchmark::DoNotOptimize(res.basis.size());
  }
  state.SetLabel(state.range(0) == 0 ? "dense" : "reduced");
}
BENCHMARK(BM_CommutantStrategies)->Arg(0)->Arg(1);

void BM_VerifyAxioms(benchmark::State& state) {
  OrbitModel model = OrbitModel::build(bench_model_spec(4, 7));
  NetModel net = NetModel::canonical(model);
  for (auto _ : state) {
    auto checks = verify_axioms(net);
    benchmark::DoNotOptimize(checks.size());
  }
}
BENCHMARK(BM_VerifyAxioms);

}  // namespace

BENCHMARK_MAIN();
