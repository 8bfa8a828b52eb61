/* Copyright 2026 The stochalg Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <benchmark/benchmark.h>

#include "stochalg/sde.hpp"

using namespace stochalg;

namespace {

LinearSDEModel nilpotent_pair() {
    LinearSDEModel m;
    m.a.assign(3, Matrix::Zero(2, 2));
    m.a[1](0, 1) = 1.0;
    m.a[2](1, 0) = 1.0;
    m.y0 = Vector(2);
    m.y0 << 1.0, 0.5;
    return m;
}

}  // namespace

static void BM_IntegralOracle(benchmark::State& state) {
    const auto grade = static_cast<std::size_t>(state.range(0));
    const IntegralOracle oracle(2, grade + 1);
    const auto seg = generate_segment(0.05, 100, 2, {0, 0, 0, 0});
    StepSample out;
    for (auto _ : state) {
        oracle.simulate(seg, out);
        benchmark::DoNotOptimize(out.values.data());
    }
}
BENCHMARK(BM_IntegralOracle)->DenseRange(1, 2)->Unit(benchmark::kMicrosecond);

static void BM_SchemeStep(benchmark::State& state) {
    const auto model = nilpotent_pair();
    const auto method = static_cast<Method>(state.range(0));
    const auto grade = static_cast<std::size_t>(state.range(1));
    const SchemePlan plan(model, method, grade, 0.05);
    const auto seg = generate_segment(0.05, 100, 2, {0, 0, 0, 0});
    const auto sample = simulate_integrals(seg, grade);
    for (auto _ : state) benchmark::DoNotOptimize(plan.step(sample, model.y0));
    state.SetLabel(to_string(method));
}
BENCHMARK(BM_SchemeStep)->ArgsProduct({{0, 1, 2}, {1, 2}});

static void BM_ReferenceStep(benchmark::State& state) {
    const auto model = nilpotent_pair();
    const auto seg = generate_segment(0.05, static_cast<std::size_t>(state.range(0)), 2, {0, 0, 0, 0});
    for (auto _ : state) benchmark::DoNotOptimize(reference_step(model, seg, model.y0));
}
BENCHMARK(BM_ReferenceStep)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
