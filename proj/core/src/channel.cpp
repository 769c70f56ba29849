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

#include "bibeam/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bibeam {

cplx los_coeff(double distance, double wavelength)
{
    if (!(distance > 0.0))
        throw std::domain_error("los_coeff: path length must be > 0");
    const double two_pi = 2.0 * std::numbers::pi;
    const double amplitude = wavelength / (2.0 * two_pi * distance);
    const double phase = -two_pi * distance / wavelength;
    return std::polar(amplitude, phase);
}

cplx link_coeff(const Point3& a, const Point3& b, const SceneConfig& scene)
{
    cplx h = los_coeff((a - b).norm(), scene.wavelength);
    if (scene.g_smc == 0.0)
        return h;
    for (double plane : scene.reflector_x)
        h += scene.g_smc * los_coeff((image_point(a, plane) - b).norm(), scene.wavelength);
    return h;
}

CVec point_channel(const SceneConfig& scene, const Point3& point)
{
    const auto& ce = scene.ce_array;
    CVec h(static_cast<Eigen::Index>(ce.size()));
    for (std::size_t m = 0; m < ce.size(); ++m)
        h(static_cast<Eigen::Index>(m)) = link_coeff(ce[m], point, scene);
    return h;
}

ChannelSet ChannelSet::from_parts(CMat h_dl, CVec h_c, CVec h_r)
{
    if (h_dl.rows() != h_r.size() || h_dl.cols() != h_c.size())
        throw std::invalid_argument("ChannelSet: H_DL must be N x M with N = |h_R|, M = |h_C|");
    if (h_c.size() == 0 || h_r.size() == 0)
        throw std::invalid_argument("ChannelSet: empty channel");
    ChannelSet out;
    out.h_bd = h_r * h_c.transpose();
    out.h_dl = std::move(h_dl);
    out.h_c = std::move(h_c);
    out.h_r = std::move(h_r);
    if (!out.h_dl.allFinite() || !out.h_bd.allFinite())
        throw std::invalid_argument("ChannelSet: non-finite channel entry");
    return out;
}

ChannelSet synth_channels(const SceneConfig& scene)
{
    scene.validate();
    const auto& ce = scene.ce_array;
    const auto& rd = scene.reader_array;
    const auto m_count = static_cast<Eigen::Index>(ce.size());
    const auto n_count = static_cast<Eigen::Index>(rd.size());

    auto checked = [&](const Point3& a, const Point3& b, const char* what, std::size_t i, std::size_t j) {
        try {
            return link_coeff(a, b, scene);
        } catch (const std::domain_error&) {
            throw std::invalid_argument(std::string("synth_channels: zero path length on ") + what + " link (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    };

    CMat h_dl(n_count, m_count);
    for (Eigen::Index n = 0; n < n_count; ++n)
        for (Eigen::Index m = 0; m < m_count; ++m)
            h_dl(n, m) = checked(ce[static_cast<std::size_t>(m)], rd[static_cast<std::size_t>(n)], "CE-reader",
                                 static_cast<std::size_t>(m), static_cast<std::size_t>(n));

    CVec h_c(m_count);
    for (Eigen::Index m = 0; m < m_count; ++m)
        h_c(m) = checked(ce[static_cast<std::size_t>(m)], scene.bde_position, "CE-BDE", static_cast<std::size_t>(m), 0);

    CVec h_r(n_count);
    for (Eigen::Index n = 0; n < n_count; ++n)
        h_r(n) = checked(rd[static_cast<std::size_t>(n)], scene.bde_position, "reader-BDE",
                         static_cast<std::size_t>(n), 0);

    return ChannelSet::from_parts(std::move(h_dl), std::move(h_c), std::move(h_r));
}

CVec steering_vector(double theta, const ArrayGeometry& array, double wavelength)
{
    (void)array.linear_axis();
    const Point3 dir(std::sin(theta), std::cos(theta), 0.0);
    const Point3 c = array.centroid();
    const double k = 2.0 * std::numbers::pi / wavelength;
    CVec g(static_cast<Eigen::Index>(array.size()));
    for (std::size_t m = 0; m < array.size(); ++m)
        g(static_cast<Eigen::Index>(m)) = std::polar(1.0, k * (array[m] - c).dot(dir));
    return g;
}

}  // namespace bibeam
