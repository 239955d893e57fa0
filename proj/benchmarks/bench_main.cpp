#include "lie_contact/contact_kernel.hpp"
#include "lie_contact/lp_dynamics.hpp"
#include "lie_contact/reduction.hpp"
#include "lie_contact/worked_examples.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

using namespace lie_contact;

namespace {

ConeSpec se2_cone() { return cone_from_wheel(WheelCurve({1.0, 0.0, 0.2}, {0.0, 0.0, 0.0}), make_algebra("se2")); }

void BM_Support(benchmark::State& state) {
  const WheelCurve w({1.0, 0.1, 0.2, 0.0, 0.01}, {0.0, 0.05, -0.1, 0.02, 0.0});
  double a = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(support(w, Vec2(std::cos(a), std::sin(a))));
    a += 0.01;
  }
}
BENCHMARK(BM_Support);

void BM_LpIntegrate(benchmark::State& state) {
  const ConeSpec cone = se2_cone();
  const TrivializedState seed = involute_seed(cone, 0.3, -0.5);
  const double T = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lp_integrate(seed, cone, T, 1e-3));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(T / 1e-3));
}
BENCHMARK(BM_LpIntegrate)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_LpIntegrateSo3(benchmark::State& state) {
  const ConeSpec cone = cone_from_wheel(SphericalWheel(Vec3::UnitZ(), std::numbers::pi / 6.0), make_algebra("so3"));
  const TrivializedState seed = spherical_seed(cone, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(lp_integrate(seed, cone, 10.0, 1e-3));
}
BENCHMARK(BM_LpIntegrateSo3)->Unit(benchmark::kMillisecond);

void BM_CharpitIntegrate(benchmark::State& state) {
  const ConeSpec cone = se2_cone();
  const TrivializedState seed = involute_seed(cone, 0.3, -0.5);
  const EquationChart eq = group_equation_chart(cone);
  const ChartPoint pt = chart_point_from_state(cone, seed.g, seed.alpha);
  for (auto _ : state) benchmark::DoNotOptimize(charpit_integrate(eq, pt, 3.0, 1e-3));
}
BENCHMARK(BM_CharpitIntegrate)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const Algebra alg = make_algebra("sl2");
  Vec lam(3);
  lam << 0.3, -1.0, 0.7;
  for (auto _ : state) benchmark::DoNotOptimize(classify({{lam}}, alg));
}
BENCHMARK(BM_Classify);

void BM_Survey(benchmark::State& state) {
  const Algebra alg = make_algebra("se2");
  for (auto _ : state) benchmark::DoNotOptimize(survey_hyperplane_classes(alg, 100, 20, 7));
}
BENCHMARK(BM_Survey)->Unit(benchmark::kMillisecond);

void BM_HuygensFront(benchmark::State& state) {
  const DiagramField field = wheel_diagram_field(WheelCurve({1.0, 0.0, 0.2}, {0.0, 0.0, 0.0}));
  const FrontPolyline f0 = circle_front(field, Vec2(0.2, 0.1), 0.4, 128);
  for (auto _ : state) benchmark::DoNotOptimize(huygens_front(f0, field, 1e-2, 100));
}
BENCHMARK(BM_HuygensFront)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
