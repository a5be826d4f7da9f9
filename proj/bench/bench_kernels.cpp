// Serial reference vs OpenMP kernels: pairing matrix and conductor table.

#include <benchmark/benchmark.h>

#include "asw/asw_class.hpp"
#include "asw/kernels.hpp"
#include "asw/text.hpp"
#include "asw/unit_group.hpp"

namespace {

struct MatrixInput {
  std::vector<asw::LiftedCharacter> chars;
  std::vector<asw::LiftedUnit> units;
};

// fil^log_4 characters of W_2(F_4) against G_{2,4}.
const MatrixInput& matrix_input() {
  static const MatrixInput in = [] {
    const auto& f = asw::FqField::conway(2, 2);
    MatrixInput r;
    r.chars = asw::prepare_characters(asw::enumerate_fil_log(f, 2, 4));
    const asw::UnitQuot g(f, 2, 4);
    std::vector<asw::LaurentFq> reps;
    for (const auto& x : g.elements()) reps.push_back(g.representative(x));
    r.units = asw::prepare_units(reps, r.chars);
    return r;
  }();
  return in;
}

const std::vector<asw::WittK>& conductor_input() {
  static const auto reps = asw::enumerate_pole_bounded(asw::FqField::conway(2, 1), 2, 3);
  return reps;
}

void BM_PairingMatrixSerial(benchmark::State& state) {
  const auto& in = matrix_input();
  for (auto _ : state) benchmark::DoNotOptimize(asw::pairing_matrix_serial(in.chars, in.units));
  state.SetItemsProcessed(state.iterations() * in.chars.size() * in.units.size());
}

void BM_PairingMatrixParallel(benchmark::State& state) {
  const auto& in = matrix_input();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asw::pairing_matrix_parallel(in.chars, in.units, jobs));
  state.SetItemsProcessed(state.iterations() * in.chars.size() * in.units.size());
}

void BM_ConductorTableSerial(benchmark::State& state) {
  const auto& reps = conductor_input();
  for (auto _ : state) benchmark::DoNotOptimize(asw::conductor_table_serial(reps));
  state.SetItemsProcessed(state.iterations() * reps.size());
}

void BM_ConductorTableParallel(benchmark::State& state) {
  const auto& reps = conductor_input();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asw::conductor_table_parallel(reps, jobs));
  state.SetItemsProcessed(state.iterations() * reps.size());
}

}  // namespace

BENCHMARK(BM_PairingMatrixSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairingMatrixParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConductorTableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConductorTableParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
