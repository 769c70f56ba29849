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

#ifndef BIBEAM_BEAMFORMING_HPP
#define BIBEAM_BEAMFORMING_HPP

#include "bibeam/channel.hpp"
#include "bibeam/sdp.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bibeam {

enum class BeamMethod { Mrt, Sdr, NullSpace };

std::string_view to_string(BeamMethod method);

/// Tightness warning threshold on the rank ratio of the relaxed solution.
inline constexpr double kRankWarning = 1e-3;

struct BeamformerOutput {
    CVec x;
    BeamMethod method = BeamMethod::Mrt;
    /// Design target in dB; NaN for MRT, -inf for the cancellation path.
    double alpha_db = std::numeric_limits<double>::quiet_NaN();
    /// eta of the realized x; NaN when no channel set was supplied.
    double achieved_eta_db = std::numeric_limits<double>::quiet_NaN();
    /// ||H_BD x||^2; NaN when no channel set was supplied.
    double objective = std::numeric_limits<double>::quiet_NaN();
    /// lambda_2 / lambda_1 of the relaxed solution viewed as a complex
    /// Hermitian matrix; 0 for the analytic paths.
    double rank_ratio = 0.0;
    bool tightness_warning = false;
    int sdp_iterations = 0;
    double duality_gap = 0.0;
    double constraint_residual = 0.0;
};

/// Raised when the relaxation solve does not finish with status Optimal.
class BeamformingError : public std::runtime_error {
public:
    BeamformingError(const std::string& what, SdpStatus status) : std::runtime_error(what), status_(status) {}
    [[nodiscard]] SdpStatus status() const { return status_; }

private:
    SdpStatus status_;
};

/// Rotates x so that its largest-magnitude entry (first one on ties) is
/// real and positive.
void normalize_phase(CVec& x);

/// x = sqrt(p_max) conj(h_c) / ||h_c||. Throws std::invalid_argument for a
/// zero channel. Objective and eta stay NaN.
BeamformerOutput mrt(const CVec& h_c, double p_max);

/// MRT towards the BDE with objective and eta filled in.
BeamformerOutput mrt(const ChannelSet& channels, double p_max);

/// Relaxed problem in the real embedding:
///   maximize tr(M_BD X) s.t. tr((M_DL - alpha M_BD) X) <= 0, tr(X) <= p_max,
/// with M_BD = G_BD^T G_BD and M_DL = G_DL^T G_DL.
SdpProblem build_sdr_problem(const ChannelSet& channels, double alpha_linear, double p_max);

struct SdrOptions {
    double gap_tol = 1e-9;
    int max_iter = 200;
};

/// Solves the relaxation for a finite alpha (dB) and extracts the
/// beamformer from the dominant eigenvector of the solution. Within a
/// (near-)degenerate top eigenspace the direction maximizing x'^T M_BD x'
/// is taken. Throws BeamformingError unless the solve is Optimal, and with
/// status Infeasible when alpha lies below the smallest achievable eta (the
/// relaxed optimum collapses to X = 0).
BeamformerOutput sdr_beamformer(const ChannelSet& channels, double alpha_db, double p_max,
                                const SdrOptions& options = {});

/// Complete DLI cancellation (alpha = -inf): x' is restricted to the
/// eigenvectors of M_DL with eigenvalue <= eps_rel * lambda_max(M_DL) and
/// the backscatter power is maximized inside that subspace. Throws
/// std::invalid_argument when the subspace is empty.
BeamformerOutput null_dli_beamformer(const ChannelSet& channels, double p_max, double eps_rel = 1e-10);

/// -inf dispatches to null_dli_beamformer, finite values to sdr_beamformer.
BeamformerOutput design_beamformer(const ChannelSet& channels, double alpha_db, double p_max,
                                   const SdrOptions& options = {});

}  // namespace bibeam

#endif  // BIBEAM_BEAMFORMING_HPP
