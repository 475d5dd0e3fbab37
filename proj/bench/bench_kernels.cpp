// Serial reference against the OpenMP kernels.  Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "coxeter/dihedral.hpp"
#include "coxeter/garside.hpp"

using namespace cox;

namespace {

// automata and root tables are built once per (preset, n), outside the timed loop
struct Fixture {
  Workspace ws;
  ElementSet low;
  Fixture(const char* name, int n) : ws(preset(name)) {
    auto r = low_elements_serial(ws, n);
    low.insert(r.elements.begin(), r.elements.end());
  }
};

Fixture& fixture(int which) {
  static Fixture a("Atilde2", 1), g("Gtilde2", 0), h("rank3:7,3", 1);
  switch (which) {
    case 0: return a;
    case 1: return g;
    default: return h;
  }
}

const char* label(int which) { return which == 0 ? "Atilde2 n=1" : which == 1 ? "Gtilde2 n=0" : "rank3:7,3 n=1"; }

void BM_low(benchmark::State& st) {
  Fixture& f = fixture(static_cast<int>(st.range(0)));
  const bool par = st.range(1) != 0;
  const int lvl = st.range(0) == 1 ? 0 : 1;
  for (auto _ : st) {
    auto r = par ? low_elements(f.ws, lvl) : low_elements_serial(f.ws, lvl);
    benchmark::DoNotOptimize(r.elements.data());
  }
  st.SetLabel(std::string(label(static_cast<int>(st.range(0)))) + (par ? " omp" : " serial"));
}

void BM_verify(benchmark::State& st) {
  Fixture& f = fixture(static_cast<int>(st.range(0)));
  const bool par = st.range(1) != 0;
  for (auto _ : st) {
    auto v = verify_garside(f.ws, f.low, par);
    benchmark::DoNotOptimize(v.pass);
  }
  st.SetLabel(std::string(label(static_cast<int>(st.range(0)))) + (par ? " omp" : " serial"));
}

void BM_bipodal(benchmark::State& st) {
  Fixture& f = fixture(static_cast<int>(st.range(0)));
  const bool par = st.range(1) != 0;
  const int lvl = st.range(0) == 1 ? 0 : 1;
  const auto& sigma = f.ws.small(lvl).roots;
  for (auto _ : st) {
    auto r = check_bipodal(f.ws.group(), sigma, 0, par);
    benchmark::DoNotOptimize(r.planes);
  }
  st.SetLabel(std::string(label(static_cast<int>(st.range(0)))) + (par ? " omp" : " serial"));
}

}  // namespace

BENCHMARK(BM_low)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_verify)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime()->Iterations(1);
BENCHMARK(BM_bipodal)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
