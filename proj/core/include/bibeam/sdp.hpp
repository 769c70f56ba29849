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

#ifndef BIBEAM_SDP_HPP
#define BIBEAM_SDP_HPP

#include "bibeam/numerics.hpp"

#include <string_view>
#include <vector>

namespace bibeam {

/// tr(a X) <= b
struct SdpConstraint {
    RMat a;
    double b = 0.0;
};

/// maximize tr(C X) subject to tr(A_i X) <= b_i, X PSD.
struct SdpProblem {
    RMat c;
    std::vector<SdpConstraint> constraints;

    [[nodiscard]] Eigen::Index dim() const { return c.rows(); }
    /// Throws std::invalid_argument on shape mismatch, asymmetry above
    /// 1e-10, non-finite data, n > 64 or an empty constraint list.
    void validate() const;
};

enum class SdpStatus { Optimal, MaxIter, Infeasible };

std::string_view to_string(SdpStatus status);

struct SdpSolution {
    RMat x;                          ///< primal matrix (unset when Infeasible)
    RVec y;                          ///< constraint multipliers, y >= 0
    double primal_objective = 0.0;   ///< tr(C X)
    double dual_objective = 0.0;     ///< b^T y
    double duality_gap = 0.0;        ///< relative: |d - p| / (1 + |p| + |d|), on scaled data
    double primal_residual = 0.0;    ///< max_i max(0, tr(A_i X) - b_i) / max(1, |b_i|)
    double dual_residual = 0.0;      ///< ||sum y_i A_i - C - Z||_F / (1 + ||C||_F), on scaled data
    double min_eigenvalue = 0.0;     ///< smallest eigenvalue of X
    int iterations = 0;
    SdpStatus status = SdpStatus::MaxIter;
};

/// Dense primal-dual interior-point solver (HKM direction with Mehrotra
/// predictor-corrector). Inequalities carry an explicit slack block that is
/// treated as a diagonal cone next to X. Data are normalized internally
/// (C and every A_i to unit Frobenius norm, b by its smallest non-zero
/// magnitude), so the returned X does not depend on a positive rescaling of
/// C and scales linearly with a common rescaling of b.
///
/// Primal infeasibility is reported when the iterates expose y >= 0 with
/// sum y_i A_i PSD and b^T y < 0 (a Farkas certificate).
SdpSolution solve_sdp(const SdpProblem& problem, double gap_tol = 1e-9, int max_iter = 200);

}  // namespace bibeam

#endif  // BIBEAM_SDP_HPP
