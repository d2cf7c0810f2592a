#include "sphersing/cone.hpp"
#include "sphersing/lattice.hpp"
#include "sphersing/singularities.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace sphersing;

namespace {

IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

SphericalSpace* sl3u() {
  static SphericalSpace* sp = [] {
    auto* s = new SphericalSpace();
    s->rank = 2;
    s->valuation_cone = Cone::full_space(2);
    s->colors = {Color{"D_alpha", iv({1, 0}), ColorType::B, 2, std::nullopt},
                 Color{"D_beta", iv({0, 1}), ColorType::B, 2, std::nullopt}};
    return s;
  }();
  return sp;
}

ColoredFan three_cone_fan() {
  ColoredFan fan;
  fan.space = sl3u();
  fan.maximal_cones = {
      ColoredCone{Cone::from_generators(2, {iv({1, 0}), iv({0, 1})}), {"D_alpha", "D_beta"}},
      ColoredCone{Cone::from_generators(2, {iv({0, 1}), iv({-1, -1})}), {"D_beta"}},
      ColoredCone{Cone::from_generators(2, {iv({-1, -1}), iv({1, 0})}), {"D_alpha"}}};
  return fan;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<IVec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    IVec row(n, Int(0));
    for (Int& c : row) c = d(rng);
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(7);
  std::vector<IntMatrix> mats;
  for (int i = 0; i < 32; ++i) mats.push_back(random_matrix(rng, state.range(0), 9));
  std::size_t i = 0;
  for (auto _ : state) {
    SmithResult r = smith_normal_form(mats[i++ % mats.size()]);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(5)->Arg(8);

static void BM_ConeDualize(benchmark::State& state) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<std::vector<IVec>> gens;
  std::size_t n = static_cast<std::size_t>(state.range(0));
  for (int i = 0; i < 32; ++i) {
    std::vector<IVec> g;
    for (std::size_t k = 0; k < n + 2; ++k) {
      IVec v(n, Int(0));
      for (Int& c : v) c = d(rng);
      g.push_back(std::move(v));
    }
    gens.push_back(std::move(g));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    Cone c = Cone::from_generators(n, gens[i++ % gens.size()]);
    benchmark::DoNotOptimize(c.facet_normals());
  }
}
BENCHMARK(BM_ConeDualize)->Arg(2)->Arg(3)->Arg(4);

static void BM_TruncatedLatticePoints(benchmark::State& state) {
  Cone c = Cone::from_generators(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})});
  QVec h{1, 1, Rat(-1, 2)};
  for (auto _ : state) {
    auto pts = truncated_lattice_points(c, h);
    benchmark::DoNotOptimize(pts);
  }
}
BENCHMARK(BM_TruncatedLatticePoints);

static void BM_DecolorAndResolve(benchmark::State& state) {
  ColoredFan fan = three_cone_fan();
  for (auto _ : state) {
    ColoredFan res = decolor_and_resolve(fan);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_DecolorAndResolve);

static void BM_Classify(benchmark::State& state) {
  ColoredFan fan = three_cone_fan();
  for (auto _ : state) {
    SingularityReport r = classify(fan);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Classify);

BENCHMARK_MAIN();
