// SPDX-License-Identifier: Apache-2.0
//
// bibeam: transmit beamforming for multi-antenna bistatic backscatter links
// Copyright (C) 2026 The bibeam Authors
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

#include <bibeam/bibeam.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace bibeam;

void BM_SynthChannels(benchmark::State& state)
{
    SceneConfig scene = SceneConfig::reference();
    const auto n = static_cast<std::size_t>(state.range(0));
    scene.ce_array = build_ula(Point3::Zero(), n, 0.05, Point3::UnitX());
    scene.reader_array = build_ula(Point3(0.0, 8.0, 0.0), n, 0.05, Point3::UnitX());
    for (auto _ : state)
        benchmark::DoNotOptimize(synth_channels(scene));
}
BENCHMARK(BM_SynthChannels)->Arg(4)->Arg(16)->Arg(64);

void BM_SdrDesign(benchmark::State& state)
{
    const SceneConfig scene = SceneConfig::reference();
    const ChannelSet ch = synth_channels(scene);
    const double alpha = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sdr_beamformer(ch, alpha, scene.p_max));
}
BENCHMARK(BM_SdrDesign)->Arg(20)->Arg(33)->Unit(benchmark::kMillisecond);

void BM_SolveSdp(benchmark::State& state)
{
    const SceneConfig scene = SceneConfig::reference();
    const SdpProblem problem = build_sdr_problem(synth_channels(scene), std::pow(10.0, 3.3), scene.p_max);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_sdp(problem));
}
BENCHMARK(BM_SolveSdp)->Unit(benchmark::kMillisecond);

void BM_MonteCarloTrials(benchmark::State& state)
{
    const SceneConfig scene = SceneConfig::reference();
    const ChannelSet ch = synth_channels(scene);
    const CVec x = mrt(ch, power_for_snr_db(-20.0, scene.gammas.slots(), ch)).x;
    const auto trials = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo_pe(ch, x, scene.gammas, trials, 1, McOptions{0, 1}));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * trials));
}
BENCHMARK(BM_MonteCarloTrials)->Arg(65536)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
