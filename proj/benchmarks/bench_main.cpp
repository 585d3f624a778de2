#include <benchmark/benchmark.h>

#include "qfock/roots_of_unity.hpp"
#include "qfock/verify.hpp"

using namespace qfock;

namespace {

const RootDatum& datum(Family f, int n) {
  static std::map<std::pair<Family, int>, RootDatum> cache;
  auto it = cache.find({f, n});
  if (it == cache.end()) it = cache.emplace(std::make_pair(f, n), build_root_datum(f, n)).first;
  return it->second;
}

void BM_QCartanDet(benchmark::State& state) {
  const auto& d = datum(Family::E, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qcartan_det(d));
}
BENCHMARK(BM_QCartanDet)->Arg(6)->Arg(7)->Arg(8);

void BM_BareissDet(benchmark::State& state) {
  const auto m = qcartan(datum(Family::E, 8));
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant(m));
}
BENCHMARK(BM_BareissDet);

void BM_CyclotomicInverse(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const CyclotomicNum x = specialize(qint(3) + LaurentZ::monomial(2), l);
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(7)->Arg(23)->Arg(29);

void BM_DetScanE8(benchmark::State& state) {
  const auto& d = datum(Family::E, 8);
  for (auto _ : state) benchmark::DoNotOptimize(detq_nonvanishing(d, 29, 58));
}
BENCHMARK(BM_DetScanE8)->Unit(benchmark::kMillisecond);

// One x-mode on every basis vector of energy <= depth.
void BM_ApplyX(benchmark::State& state) {
  const auto& d = datum(Family::D, 4);
  const auto basis = enumerate_basis(d, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& b : basis) benchmark::DoNotOptimize(apply_x(d, 1, -1, -1, FockZ::basis(b)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(basis.size()));
}
BENCHMARK(BM_ApplyX)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DividedPower(benchmark::State& state) {
  const auto& d = datum(Family::A, 2);
  const auto basis = enumerate_basis(d, 3);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const auto& b : basis) benchmark::DoNotOptimize(apply_x_divided(d, 0, 1, -1, r, FockZ::basis(b)));
  }
}
BENCHMARK(BM_DividedPower)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Character(benchmark::State& state) {
  const auto& d = datum(Family::E, 8);
  for (auto _ : state) benchmark::DoNotOptimize(character(d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Character)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LemmaId(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma_id(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LemmaId)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_DrinfeldA1(benchmark::State& state) {
  DrinfeldOptions opt;
  opt.depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_drinfeld(datum(Family::A, 1), opt));
}
BENCHMARK(BM_DrinfeldA1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HeisenbergKernel(benchmark::State& state) {
  const auto& d = datum(Family::A, 2);
  for (auto _ : state) benchmark::DoNotOptimize(heisenberg_kernel(d, static_cast<int>(state.range(0)), 4));
}
BENCHMARK(BM_HeisenbergKernel)->Arg(0)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CertifyIrreducible(benchmark::State& state) {
  const auto& d = datum(Family::A, 1);
  for (auto _ : state) benchmark::DoNotOptimize(certify_irreducible(d, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CertifyIrreducible)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
