/*
   Copyright 2026 the ringfactor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "benchmark/benchmark.h"

#include "ringfactor/elementary.hpp"
#include "ringfactor/exponential.hpp"
#include "ringfactor/riemann.hpp"

#include "test_support.hpp"

using namespace ringfactor;
using testing::Rng;

namespace {

void BM_MatmulJet5(benchmark::State& state) {
    auto desc = RingDescriptor::jet(RingDescriptor::rationals(), 5);
    Rng rng(1);
    auto a = testing::random_sl(5, desc, rng, 4);
    auto b = testing::random_sl(5, desc, rng, 4);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatmulJet5);

void BM_FactorSl2Rational(benchmark::State& state) {
    auto qq = RingDescriptor::rationals();
    Rng rng(2);
    auto x = testing::random_sl(2, qq, rng, 8);
    for (auto _ : state) benchmark::DoNotOptimize(factor_bsr1_sl2(x));
}
BENCHMARK(BM_FactorSl2Rational);

void BM_FactorSlnJet(benchmark::State& state) {
    auto desc = RingDescriptor::jet(RingDescriptor::rationals(), 4);
    Rng rng(3);
    auto n = static_cast<size_t>(state.range(0));
    auto x = testing::random_sl(n, desc, rng, 2 * static_cast<int>(n));
    for (auto _ : state) benchmark::DoNotOptimize(factor_bsr1_sln(x));
}
BENCHMARK(BM_FactorSlnJet)->Arg(3)->Arg(4)->Arg(5);

void BM_FactorEuclideanZ(benchmark::State& state) {
    auto zz = RingDescriptor::integers();
    Rng rng(4);
    auto x = testing::random_sl(4, zz, rng, 6);
    for (auto _ : state) benchmark::DoNotOptimize(factor_euclidean(x));
}
BENCHMARK(BM_FactorEuclideanZ);

void BM_UnipotentLog(benchmark::State& state) {
    auto desc = RingDescriptor::jet(RingDescriptor::rationals(), 4);
    Rng rng(5);
    auto u = testing::random_unitriangular(6, desc, rng, true);
    for (auto _ : state) benchmark::DoNotOptimize(unipotent_log(u));
}
BENCHMARK(BM_UnipotentLog);

void BM_PolyRootsDouble(benchmark::State& state) {
    // (z - 1/2)^2 (z + 2)
    std::vector<analytic::cplx> p{0.5, -0.75, -1.0, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(analytic::poly_roots(p, 1e-10));
}
BENCHMARK(BM_PolyRootsDouble);

void BM_HermiteThreeNodes(benchmark::State& state) {
    std::vector<analytic::HermiteNode> nodes{
        {analytic::cplx(0.0), {{0.1, 0.2}, {0.3, -0.1}}},
        {analytic::cplx(1.0, 0.5), {{-0.4, 0.0}, {0.2, 0.2}, {0.0, 0.1}}},
        {analytic::cplx(-1.0, -0.5), {{0.7, -0.3}}},
    };
    for (auto _ : state) benchmark::DoNotOptimize(analytic::hermite_interpolate(nodes));
}
BENCHMARK(BM_HermiteThreeNodes);

void BM_ThreeExpShear(benchmark::State& state) {
    auto pr = RingDescriptor::poly(RingDescriptor::rationals());
    RingMatrix x = RingMatrix::identity(2, pr);
    x.set(1, 0, RingElement::poly(pr, {RingElement::rational(Rat(0)),
                                       RingElement::rational(Rat(1))}));
    for (auto _ : state) benchmark::DoNotOptimize(three_exp_sl2(x));
}
BENCHMARK(BM_ThreeExpShear);

void BM_VerifyThreeExp(benchmark::State& state) {
    auto pr = RingDescriptor::poly(RingDescriptor::rationals());
    RingMatrix x = RingMatrix::identity(2, pr);
    x.set(1, 0, RingElement::poly(pr, {RingElement::rational(Rat(0)),
                                       RingElement::rational(Rat(1))}));
    auto cert = three_exp_sl2(x);
    SampleGrid grid;
    for (auto _ : state) benchmark::DoNotOptimize(verify_exp_certificate(cert, grid));
}
BENCHMARK(BM_VerifyThreeExp);

void BM_ExpmPade2x2(benchmark::State& state) {
    std::vector<analytic::cplx> m{{0.3, 0.7}, {1.2, -0.4}, {-0.8, 0.1}, {0.5, 0.9}};
    for (auto _ : state) benchmark::DoNotOptimize(expm(m, 2));
}
BENCHMARK(BM_ExpmPade2x2);

} // namespace

BENCHMARK_MAIN();
