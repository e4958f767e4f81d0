#include <benchmark/benchmark.h>

#include <random>

#include "shfkit/catalog.hpp"
#include "shfkit/torsion.hpp"

namespace {

using namespace shfkit;

KForm random_form(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  KForm f = KForm::zero(degree);
  for (int i = 0; i < f.coeffs().size(); ++i) f.coeffs()[i] = u(rng);
  return f;
}

void BM_Wedge33(benchmark::State& state) {
  std::mt19937_64 rng(1);
  KForm a = random_form(3, rng), b = random_form(3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_Wedge33);

void BM_SEndo(benchmark::State& state) {
  std::mt19937_64 rng(2);
  KForm rho = random_form(3, rng);
  KForm vol = KForm::basis({1, 2, 3, 4, 5, 6});
  for (auto _ : state) benchmark::DoNotOptimize(s_endo(rho, vol));
}
BENCHMARK(BM_SEndo);

void BM_HodgeStar3(benchmark::State& state) {
  std::mt19937_64 rng(3);
  KForm phi = random_form(3, rng);
  MetricGram g;
  KForm vol = KForm::basis({1, 2, 3, 4, 5, 6});
  for (auto _ : state) benchmark::DoNotOptimize(hodge_star(phi, g, vol));
}
BENCHMARK(BM_HodgeStar3);

void BM_ValidateFlatModel(benchmark::State& state) {
  KForm omega = KForm::basis({1, 2}) + KForm::basis({3, 4}) + KForm::basis({5, 6});
  KForm psi = KForm::basis({1, 3, 5}) - KForm::basis({1, 4, 6}) - KForm::basis({2, 3, 6}) -
              KForm::basis({2, 4, 5});
  for (auto _ : state) benchmark::DoNotOptimize(validate_su3(omega, psi));
}
BENCHMARK(BM_ValidateFlatModel);

void BM_CeDifferential3(benchmark::State& state) {
  const GeneratedFamily& fam = family_data(Family::SU21);
  FamilyBuild fb = build_su21(-1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(ce_differential(fb.structure.psi_hat, fam.alg));
}
BENCHMARK(BM_CeDifferential3);

void BM_BuildSu21(benchmark::State& state) {
  family_data(Family::SU21);  // warm the cache
  for (auto _ : state) benchmark::DoNotOptimize(build_su21(-1.0, 1.0));
}
BENCHMARK(BM_BuildSu21);

void BM_RicciReport(benchmark::State& state) {
  FamilyBuild fb = build_su21(-1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(ricci_report(fb.structure, fb.data->alg));
}
BENCHMARK(BM_RicciReport);

void BM_Regenerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(regenerate(Family::SO41));
}
BENCHMARK(BM_Regenerate);

}  // namespace
