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

#ifndef BIBEAM_DETECTION_HPP
#define BIBEAM_DETECTION_HPP

#include "bibeam/channel.hpp"

#include <cstdint>
#include <span>
#include <string_view>

namespace bibeam {

/// Gaussian tail probability Q(x) = 0.5 erfc(x / sqrt(2)).
double q_function(double x);

/// x with Q(x) = p for p in (0, 1), by bisection on q_function.
double q_inverse(double p);

/// L' = sum_j (gamma1_j - gamma0_j) Re{y'_j^H H_BD x}, where y'_j is the
/// received vector of slot j with the known direct term H_DL x removed.
/// Throws std::invalid_argument on dimension mismatch.
double map_statistic(std::span<const CVec> received_minus_direct, const GammaScheme& scheme, const CMat& h_bd,
                     const CVec& x);

/// mu = sum_j ((gamma1_j)^2 - (gamma0_j)^2) / 2 * ||H_BD x||^2
double map_threshold(const GammaScheme& scheme, const CMat& h_bd, const CVec& x);

/// 1 iff L' > mu; a tie decides 0.
int decide(double l_prime, double mu);

/// P_e = Q(||H_BD x|| / sqrt(2) * sqrt(sum_j (gamma1_j - gamma0_j)^2)) for
/// unit-variance circularly-symmetric complex noise and equal priors.
double closed_form_pe(const GammaScheme& scheme, const CMat& h_bd, const CVec& x);

/// Name of the random stream construction, echoed in run manifests.
inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64 per block of 65536 trials, seeded by std::seed_seq{seed, stream, block} (32-bit halves); "
    "normals by Box-Muller on 53-bit uniforms";

inline constexpr std::uint64_t kTrialsPerBlock = 65536;

struct McOptions {
    std::uint64_t stream = 0;   ///< separates independent curves under one seed
    unsigned workers = 0;       ///< 0 = hardware concurrency; results do not depend on it
    double noise_scale = 1.0;   ///< noise standard-deviation multiplier (test hook)
};

struct McResult {
    double estimate = 0.0;
    double ci_halfwidth_95 = 0.0;  ///< Wald interval
    std::uint64_t trials = 0;
    std::uint64_t errors = 0;
    std::uint64_t trials_bit0 = 0;
    std::uint64_t errors_bit0 = 0;
    std::uint64_t trials_bit1 = 0;
    std::uint64_t errors_bit1 = 0;
};

/// Simulates equiprobable bits through y_j = H_DL x + gamma_j H_BD x + w_j with
/// w_j ~ CN(0, I), runs the MAP detector and counts errors. Trials are cut
/// into fixed blocks with their own generator, so the result depends only
/// on (trials, seed, stream). Throws std::invalid_argument for trials = 0.
McResult monte_carlo_pe(const ChannelSet& channels, const CVec& x, const GammaScheme& scheme, std::uint64_t trials,
                        std::uint64_t seed, const McOptions& options = {});

/// SNR = p_max J ||H_BD||_F^2 / (M N), in dB.
double snr_db(double p_max, std::size_t slots, const ChannelSet& channels);
double snr_db(const SceneConfig& scene, const ChannelSet& channels);

/// Transmit power that realizes the given SNR (dB) for J slots.
double power_for_snr_db(double snr_db_value, std::size_t slots, const ChannelSet& channels);

/// SNR (dB) at which a beamformer with direction `direction` reaches
/// closed-form error probability `target_pe` when its power is swept.
double required_snr_db(const ChannelSet& channels, const CVec& direction, const GammaScheme& scheme,
                       double target_pe);

}  // namespace bibeam

#endif  // BIBEAM_DETECTION_HPP
