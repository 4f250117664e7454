#include "brauer/algebra.hpp"
#include "brauer/classify.hpp"
#include "brauer/mutation.hpp"
#include "brauer/triangulation.hpp"
#include "brauer/walks.hpp"

#include <benchmark/benchmark.h>

using namespace brauer;

namespace {

BrauerGraph fan(int n) { return triangulation_graph(all_triangulations(n).front()); }

BrauerGraph load(const char* name) { return load_graph(std::string(BRAUER_DATA_DIR) + "/graphs/" + name + ".bg"); }

} // namespace

static void BM_Presentation(benchmark::State& st) {
  auto g = fan(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(presentation(g));
}
BENCHMARK(BM_Presentation)->Arg(8)->Arg(32)->Arg(128);

static void BM_Projectives(benchmark::State& st) {
  auto g = load("g1");
  for (auto _ : st) benchmark::DoNotOptimize(projectives(g));
}
BENCHMARK(BM_Projectives);

static void BM_GreenWalks(benchmark::State& st) {
  auto g = fan(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(double_stepped_walks(g));
}
BENCHMARK(BM_GreenWalks)->Arg(32)->Arg(256)->Arg(1024);

static void BM_KauerMove(benchmark::State& st) {
  auto g = load("square");
  for (auto _ : st) benchmark::DoNotOptimize(kauer_move(g, "0"));
}
BENCHMARK(BM_KauerMove);

static void BM_Classify(benchmark::State& st) {
  auto g = load("exceptional");
  for (auto _ : st) benchmark::DoNotOptimize(ar_components(g));
}
BENCHMARK(BM_Classify);

static void BM_FlipIsKauer(benchmark::State& st) {
  auto ts = all_triangulations(static_cast<int>(st.range(0)));
  for (auto _ : st)
    for (const auto& t : ts) benchmark::DoNotOptimize(flip_is_kauer(t));
}
BENCHMARK(BM_FlipIsKauer)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
