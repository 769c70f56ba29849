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

#ifndef BIBEAM_CHANNEL_HPP
#define BIBEAM_CHANNEL_HPP

#include "bibeam/numerics.hpp"
#include "bibeam/scene.hpp"

namespace bibeam {

/// Free-space coefficient (lambda / (4 pi d)) exp(-j 2 pi d / lambda).
/// Throws std::domain_error for d <= 0.
cplx los_coeff(double distance, double wavelength);

/// Coefficient between two points: LOS term plus one first-order specular
/// term per reflector plane, each scaled by g_smc. The model depends only on
/// path lengths, so it is reciprocal in (a, b).
cplx link_coeff(const Point3& a, const Point3& b, const SceneConfig& scene);

/// Channel from every CE element to `point` (length M).
CVec point_channel(const SceneConfig& scene, const Point3& point);

struct ChannelSet {
    CMat h_dl;  ///< N x M, CE -> reader
    CVec h_c;   ///< M, CE -> BDE
    CVec h_r;   ///< N, BDE -> reader
    CMat h_bd;  ///< N x M, h_r h_c^T

    [[nodiscard]] Eigen::Index m() const { return h_c.size(); }
    [[nodiscard]] Eigen::Index n() const { return h_r.size(); }

    /// Assembles a set from explicit channels; h_bd is the outer product.
    static ChannelSet from_parts(CMat h_dl, CVec h_c, CVec h_r);
};

/// Builds H_DL, h_C and h_R from the scene geometry.
ChannelSet synth_channels(const SceneConfig& scene);

/// Far-field steering vector of a linear array for departure angle theta
/// (radians from +y broadside towards +x, direction (sin t, cos t, 0)).
/// Element m has unit magnitude and phase +(2 pi / lambda) (p_m - c) . u,
/// so g(theta)^T x is the far-field amplitude radiated towards theta.
CVec steering_vector(double theta, const ArrayGeometry& array, double wavelength);

}  // namespace bibeam

#endif  // BIBEAM_CHANNEL_HPP
