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

#include "bibeam/detection.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace bibeam {

namespace {

struct BlockCounts {
    std::uint64_t trials_bit0 = 0;
    std::uint64_t errors_bit0 = 0;
    std::uint64_t trials_bit1 = 0;
    std::uint64_t errors_bit1 = 0;
};

std::uint32_t lo32(std::uint64_t v)
{
    return static_cast<std::uint32_t>(v & 0xffffffffu);
}

std::uint32_t hi32(std::uint64_t v)
{
    return static_cast<std::uint32_t>(v >> 32);
}

class NormalSource {
public:
    NormalSource(std::uint64_t seed, std::uint64_t stream, std::uint64_t block)
    {
        std::seed_seq seq{lo32(seed), hi32(seed), lo32(stream), hi32(stream), lo32(block), hi32(block)};
        engine_.seed(seq);
    }

    std::uint64_t bits() { return engine_(); }

    // CN(0, 1) sample: independent N(0, 1/2) real and imaginary parts.
    cplx complex_normal()
    {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));  // sqrt(-2 ln u1) / sqrt(2)
        const double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 engine_;
};

}  // namespace

double q_function(double x)
{
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double q_inverse(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("q_inverse: p must lie in (0, 1)");
    double lo = -40.0;
    double hi = 40.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (q_function(mid) > p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double map_statistic(std::span<const CVec> received_minus_direct, const GammaScheme& scheme, const CMat& h_bd,
                     const CVec& x)
{
    if (received_minus_direct.size() != scheme.slots() || scheme.gamma1.size() != scheme.slots())
        throw std::invalid_argument("map_statistic: one received vector per slot required");
    if (h_bd.cols() != x.size())
        throw std::invalid_argument("map_statistic: H_BD columns must match x");
    const CVec s = h_bd * x;
    double stat = 0.0;
    for (std::size_t j = 0; j < scheme.slots(); ++j) {
        const CVec& yj = received_minus_direct[j];
        if (yj.size() != s.size())
            throw std::invalid_argument("map_statistic: received vector length must match H_BD rows");
        stat += (scheme.gamma1[j] - scheme.gamma0[j]) * yj.dot(s).real();
    }
    return stat;
}

double map_threshold(const GammaScheme& scheme, const CMat& h_bd, const CVec& x)
{
    const double energy = (h_bd * x).squaredNorm();
    double acc = 0.0;
    for (std::size_t j = 0; j < scheme.slots(); ++j)
        acc += 0.5 * (scheme.gamma1[j] * scheme.gamma1[j] - scheme.gamma0[j] * scheme.gamma0[j]);
    return acc * energy;
}

int decide(double l_prime, double mu)
{
    return l_prime > mu ? 1 : 0;
}

double closed_form_pe(const GammaScheme& scheme, const CMat& h_bd, const CVec& x)
{
    const double amplitude = (h_bd * x).norm();
    return q_function(amplitude / std::numbers::sqrt2 * std::sqrt(scheme.separation()));
}

McResult monte_carlo_pe(const ChannelSet& channels, const CVec& x, const GammaScheme& scheme, std::uint64_t trials,
                        std::uint64_t seed, const McOptions& options)
{
    if (trials == 0)
        throw std::invalid_argument("monte_carlo_pe: trials must be >= 1");
    scheme.validate();
    if (x.size() != channels.m())
        throw std::invalid_argument("monte_carlo_pe: x length must match the CE array");

    const CVec direct = channels.h_dl * x;
    const CVec s = channels.h_bd * x;
    const double mu = map_threshold(scheme, channels.h_bd, x);
    const auto n = s.size();
    const std::size_t slots = scheme.slots();
    const double noise = options.noise_scale;

    const std::uint64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
    std::vector<BlockCounts> per_block(blocks);

    auto run_block = [&](std::uint64_t block) {
        NormalSource rng(seed, options.stream, block);
        const std::uint64_t begin = block * kTrialsPerBlock;
        const std::uint64_t count = std::min(kTrialsPerBlock, trials - begin);
        BlockCounts counts;
        CVec y(n);
        for (std::uint64_t t = 0; t < count; ++t) {
            const int bit = static_cast<int>(rng.bits() >> 63);
            const auto& gammas = bit == 1 ? scheme.gamma1 : scheme.gamma0;
            double stat = 0.0;
            for (std::size_t j = 0; j < slots; ++j) {
                for (Eigen::Index i = 0; i < n; ++i)
                    y(i) = direct(i) + gammas[j] * s(i) + noise * rng.complex_normal();
                double corr = 0.0;
                for (Eigen::Index i = 0; i < n; ++i) {
                    const cplx yp = y(i) - direct(i);
                    corr += yp.real() * s(i).real() + yp.imag() * s(i).imag();
                }
                stat += (scheme.gamma1[j] - scheme.gamma0[j]) * corr;
            }
            const bool error = decide(stat, mu) != bit;
            if (bit == 1) {
                ++counts.trials_bit1;
                counts.errors_bit1 += error ? 1 : 0;
            } else {
                ++counts.trials_bit0;
                counts.errors_bit0 += error ? 1 : 0;
            }
        }
        per_block[block] = counts;
    };

    unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < blocks; ++b)
            run_block(b);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t b = next++; b < blocks; b = next++)
                    run_block(b);
            });
    }

    McResult result;
    for (const auto& c : per_block) {
        result.trials_bit0 += c.trials_bit0;
        result.errors_bit0 += c.errors_bit0;
        result.trials_bit1 += c.trials_bit1;
        result.errors_bit1 += c.errors_bit1;
    }
    result.trials = result.trials_bit0 + result.trials_bit1;
    result.errors = result.errors_bit0 + result.errors_bit1;
    result.estimate = static_cast<double>(result.errors) / static_cast<double>(result.trials);
    result.ci_halfwidth_95 =
        1.96 * std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(result.trials));
    return result;
}

double snr_db(double p_max, std::size_t slots, const ChannelSet& channels)
{
    const double mn = static_cast<double>(channels.m() * channels.n());
    return 10.0 * std::log10(p_max * static_cast<double>(slots) * channels.h_bd.squaredNorm() / mn);
}

double snr_db(const SceneConfig& scene, const ChannelSet& channels)
{
    return snr_db(scene.p_max, scene.gammas.slots(), channels);
}

double power_for_snr_db(double snr_db_value, std::size_t slots, const ChannelSet& channels)
{
    const double mn = static_cast<double>(channels.m() * channels.n());
    return std::pow(10.0, snr_db_value / 10.0) * mn / (static_cast<double>(slots) * channels.h_bd.squaredNorm());
}

double required_snr_db(const ChannelSet& channels, const CVec& direction, const GammaScheme& scheme,
                       double target_pe)
{
    if (!(target_pe > 0.0 && target_pe < 0.5))
        throw std::domain_error("required_snr_db: target_pe must lie in (0, 0.5)");
    const double norm = direction.norm();
    if (!(norm > 0.0))
        throw std::invalid_argument("required_snr_db: zero direction");
    const double gain = (channels.h_bd * (direction / norm)).squaredNorm();
    if (!(gain > 0.0))
        throw std::domain_error("required_snr_db: direction carries no backscatter power");
    // Q(sqrt(P gain sep / 2)) = target_pe
    const double arg = q_inverse(target_pe);
    const double power = 2.0 * arg * arg / (gain * scheme.separation());
    return snr_db(power, scheme.slots(), channels);
}

}  // namespace bibeam
