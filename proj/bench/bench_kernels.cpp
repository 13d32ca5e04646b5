// Serial reference vs OpenMP kernels on the deformed products.
#include "polyprod/construction.hpp"
#include "polyprod/lattice.hpp"
#include "polyprod/pipeline.hpp"
#include "polyprod/projection.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace polyprod;

namespace {

const HPolytope& system_for(int n, int r) {
  static std::map<std::pair<int, int>, HPolytope> cache;
  auto it = cache.find({n, r});
  if (it == cache.end()) it = cache.emplace(std::pair{n, r}, build_deformed_product(choose_parameters(n, r))).first;
  return it->second;
}

const Instance& instance_for(int n, int r) {
  static std::map<std::pair<int, int>, Instance> cache;
  auto it = cache.find({n, r});
  if (it == cache.end()) it = cache.emplace(std::pair{n, r}, load_instance(system_for(n, r), n, r)).first;
  return it->second;
}

Exec mode(const benchmark::State& state) { return state.range(2) == 0 ? Exec::serial : Exec::parallel; }

void BM_h_to_v(benchmark::State& state) {
  const auto& h = system_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(h_to_v(h, mode(state)));
}

void BM_face_lattice(benchmark::State& state) {
  const auto& inst = instance_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(face_lattice(inst.setup->image_v, mode(state)));
}

void BM_check_faces(benchmark::State& state) {
  const auto& inst = instance_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::vector<IndexSet> faces;
  for (const auto& p : enumerate_polygon_faces(*inst.labeling)) faces.push_back(p.vertices);
  for (auto _ : state) benchmark::DoNotOptimize(check_faces(*inst.setup, faces, mode(state)));
}

void grid(benchmark::internal::Benchmark* b) {
  for (auto [n, r] : {std::pair{4, 3}, {6, 3}, {4, 4}})
    for (int parallel : {0, 1}) b->Args({n, r, parallel});
  b->ArgNames({"n", "r", "parallel"})->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_h_to_v)->Apply(grid);
BENCHMARK(BM_face_lattice)->Apply(grid);
BENCHMARK(BM_check_faces)->Apply(grid);

BENCHMARK_MAIN();
