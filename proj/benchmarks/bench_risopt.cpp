// SPDX-License-Identifier: Apache-2.0
//
// risopt: statistical-CSI design of RIS-aided multi-user MIMO downlinks
// Copyright (C) 2026 The risopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "risopt/beamforming.hpp"
#include "risopt/channel.hpp"
#include "risopt/correlation.hpp"
#include "risopt/phase_opt.hpp"
#include "risopt/rate.hpp"
#include "risopt/rng.hpp"

using namespace risopt;

namespace {

LinkStats stats_for(Index n)
{
    return LinkStats{1e-4, {1e-5, 1e-5},
                     CorrelationSet{exp_correlation(10, 0.2), exp_correlation(n, 0.4),
                                    exp_correlation(n, 0.4),
                                    {exp_correlation(3, 0.2), exp_correlation(3, 0.2)}},
                     {1e-9, 1e-9}};
}

void bm_pga(benchmark::State &state)
{
    const auto n = static_cast<Index>(state.range(0));
    const auto c = exp_correlation(n, 0.4);
    const CMatrix xi = reflection_kernel(c.entries(), c.entries());
    RandomStream rng(StreamKey{1, 0, 0});
    PgaOptions opts;
    opts.initial = random_phases(n, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_phases(xi, opts));
}
BENCHMARK(bm_pga)->Arg(16)->Arg(80)->Arg(200);

void bm_deterministic_rate(benchmark::State &state)
{
    const auto n = static_cast<Index>(state.range(0));
    const auto stats = stats_for(n);
    RandomStream rng(StreamKey{1, 0, 0});
    const auto w = epa_precoder(10, 2, 3, 1e4, rng);
    const auto theta = PhaseState::identity(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(deterministic_sum_rate(stats, theta, w));
}
BENCHMARK(bm_deterministic_rate)->Arg(80)->Arg(400);

void bm_channel_sample(benchmark::State &state)
{
    const auto n = static_cast<Index>(state.range(0));
    const ChannelSampler sampler(stats_for(n));
    std::uint64_t trial = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sampler.sample(1, trial++));
}
BENCHMARK(bm_channel_sample)->Arg(80)->Arg(400);

void bm_power_weights(benchmark::State &state)
{
    RVector r(3);
    r << 1.5, 1.0, 0.5;
    const EffectiveNoise noise{{0.05, 0.5}, {r, r * 0.7}};
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_power_weights(noise, 1.0));
}
BENCHMARK(bm_power_weights);

} // namespace

BENCHMARK_MAIN();
