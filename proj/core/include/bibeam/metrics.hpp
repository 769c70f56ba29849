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

#ifndef BIBEAM_METRICS_HPP
#define BIBEAM_METRICS_HPP

#include "bibeam/channel.hpp"

#include <span>
#include <vector>

namespace bibeam {

/// Below this DLI-to-backscatter power ratio the dynamic range is reported
/// as -inf dB.
inline constexpr double kEtaFloorRatio = 1e-15;

/// Received dynamic range eta = ||H_DL x||^2 / ||H_BD x||^2 in dB (the
/// reciprocal of the SIR). Throws std::domain_error when ||H_BD x|| = 0.
double eta_db(const ChannelSet& channels, const CVec& x);

/// Path gain |h(point)^T x|^2 / ||x||^2 in dB, where h(point) is the CE ->
/// point channel with the scene's reflectors. Throws std::invalid_argument
/// for x = 0 or a point on top of a CE element.
double path_gain_db(const SceneConfig& scene, const CVec& x, const Point3& point);

struct GridSpec {
    double x_min = -2.0;
    double x_max = 2.0;
    double y_min = 0.0;
    double y_max = 8.0;
    double z = 0.0;
    double step = 0.05;

    [[nodiscard]] std::vector<double> xs() const;
    [[nodiscard]] std::vector<double> ys() const;
};

struct PathGainMap {
    std::vector<double> xs;
    std::vector<double> ys;
    double z = 0.0;
    /// Row-major over (y, x): pg_db[iy * xs.size() + ix]. Points within a
    /// quarter wavelength of a CE element hold -inf.
    std::vector<double> pg_db;

    [[nodiscard]] double at(std::size_t ix, std::size_t iy) const { return pg_db[iy * xs.size() + ix]; }
};

PathGainMap path_gain_map(const SceneConfig& scene, const CVec& x, const GridSpec& grid = {});

/// E_t(theta) = |g(theta)^T x|^2 for every angle (radians).
std::vector<double> radiation_pattern(const CVec& x, const ArrayGeometry& array, double wavelength,
                                      std::span<const double> thetas);

}  // namespace bibeam

#endif  // BIBEAM_METRICS_HPP
