#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "chernlab/graded_module.hpp"
#include "chernlab/groebner.hpp"
#include "chernlab/ideal.hpp"
#include "chernlab/parse.hpp"
#include "chernlab/verifier.hpp"

using namespace chernlab;

namespace {

Ring six() { return make_ring({"x1", "x2", "x3", "x4", "x5", "x6"}); }

std::vector<Polynomial> polys(const Ring& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

ProblemInstance two_planes(int max_power) {
  return make_instance(make_ring({"x", "y", "z", "w"}), {{"x", "y"}, {"z", "w"}}, {"x + z", "y + w"}, max_power);
}

ProblemInstance two_three_planes(int max_power) {
  return make_instance(six(), {{"x1", "x2", "x3"}, {"x4", "x5", "x6"}}, {"x1 + x4", "x2 + x5", "x3 + x6"},
                       max_power);
}

}  // namespace

static void BM_BuchbergerPower(benchmark::State& state) {
  const Ring ring = six();
  const Ideal core = ideal_intersect(Ideal(ring, polys(ring, {"x1", "x2", "x3"})),
                                     Ideal(ring, polys(ring, {"x4", "x5", "x6"})));
  const Ideal power = ideal_power(Ideal(ring, polys(ring, {"x1 + x4", "x2 + x5", "x3 + x6"})),
                                  static_cast<int>(state.range(0)));
  std::vector<Polynomial> gens(core.generators().begin(), core.generators().end());
  gens.insert(gens.end(), power.generators().begin(), power.generators().end());
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, ring));
}
BENCHMARK(BM_BuchbergerPower)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_HilbertKTwoPlanes(benchmark::State& state) {
  for (auto _ : state) {
    Verifier v(two_planes(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(v.hilbert_k());
  }
}
BENCHMARK(BM_HilbertKTwoPlanes)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_HilbertKTwoThreePlanes(benchmark::State& state) {
  for (auto _ : state) {
    Verifier v(two_three_planes(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(v.hilbert_k());
  }
}
BENCHMARK(BM_HilbertKTwoThreePlanes)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BuildL(benchmark::State& state) {
  const Ring ring = make_ring({"x", "y", "z", "w"});
  const std::vector<Ideal> ideals{Ideal(ring, polys(ring, {"x", "y^2"})), Ideal(ring, polys(ring, {"z", "w"})),
                                  Ideal(ring, polys(ring, {"x + z", "y + w"}))};
  for (auto _ : state) benchmark::DoNotOptimize(build_L(ideals));
}
BENCHMARK(BM_BuildL)->Unit(benchmark::kMillisecond);

static void BM_Verify(benchmark::State& state) {
  for (auto _ : state) {
    Verifier v(state.range(0) == 0 ? two_planes(0) : two_three_planes(0));
    benchmark::DoNotOptimize(v.run());
  }
}
BENCHMARK(BM_Verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
