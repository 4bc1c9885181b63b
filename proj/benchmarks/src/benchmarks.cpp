// Microbenchmarks for the hot paths: Littlewood-Richardson coefficients,
// Schur-power pushforwards, lattice cohomology scans and monomial
// enumeration. Run the binary directly; it is not part of the test suite.

#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "qfv/partitions.hpp"
#include "qfv/quiver.hpp"
#include "qfv/schur.hpp"
#include "qfv/toric.hpp"
#include "qfv/toric_cohomology.hpp"

namespace {

qfv::QuiverFlagSpec make_spec(int vertices,
                              const std::vector<std::pair<int, int>>& arrows,
                              const std::vector<int>& dims) {
  qfv::Quiver q;
  q.vertices = vertices;
  for (auto [t, h] : arrows) q.arrows.push_back({t, h});
  return qfv::QuiverFlagSpec(q, dims);
}

qfv::QuiverFlagSpec proj_bundle() {
  return make_spec(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 2}}, {1, 1, 1});
}

qfv::QuiverFlagSpec gr_bundle() {
  return make_spec(3, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 2}},
                   {1, 2, 2});
}

qfv::QuiverFlagSpec tower() {
  return make_spec(4,
                   {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2},
                    {1, 3}, {2, 3}, {2, 3}},
                   {1, 1, 1, 1});
}

void BM_LittlewoodRichardson(benchmark::State& state) {
  const qfv::Partition lambda = {4, 2, 1};
  const qfv::Partition mu = {3, 2};
  const qfv::Partition nu = {6, 4, 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(qfv::lr_coefficient(lambda, mu, nu));
}
BENCHMARK(BM_LittlewoodRichardson);

void BM_GrassmannSections(benchmark::State& state) {
  const auto spec = gr_bundle();
  const auto term = qfv::det_term(spec, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qfv::h0_dim(spec, term));
}
BENCHMARK(BM_GrassmannSections);

void BM_CohomologyScan(benchmark::State& state) {
  const auto spec = proj_bundle();
  const std::vector<qfv::Int> theta = {qfv::Int(0), qfv::Int(-3)};
  qfv::CohomologyOptions opts;
  opts.search_radius = (int)state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(qfv::cohomology_dims(spec, theta, opts));
}
BENCHMARK(BM_CohomologyScan)->DenseRange(4, 12, 4);

void BM_MonomialEnumeration(benchmark::State& state) {
  const auto cox = qfv::cox_data_of(tower());
  const std::vector<qfv::Int> degree = {qfv::Int(2), qfv::Int(2), qfv::Int(2)};
  for (auto _ : state)
    benchmark::DoNotOptimize(qfv::monomials_of_degree(cox, degree));
}
BENCHMARK(BM_MonomialEnumeration);

}  // namespace

BENCHMARK_MAIN();
