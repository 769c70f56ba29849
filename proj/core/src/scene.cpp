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

#include "bibeam/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bibeam {

namespace {

constexpr double kCoincidentTol = 1e-12;

}  // namespace

ArrayGeometry::ArrayGeometry(std::vector<Point3> elements) : elements_(std::move(elements))
{
    if (elements_.empty())
        throw std::invalid_argument("ArrayGeometry: at least one element required");
    for (const auto& p : elements_)
        if (!p.allFinite())
            throw std::invalid_argument("ArrayGeometry: non-finite element position");
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = i + 1; j < elements_.size(); ++j)
            if ((elements_[i] - elements_[j]).norm() <= kCoincidentTol)
                throw std::invalid_argument("ArrayGeometry: elements " + std::to_string(i) + " and " +
                                            std::to_string(j) + " coincide");
}

Point3 ArrayGeometry::centroid() const
{
    Point3 c = Point3::Zero();
    for (const auto& p : elements_)
        c += p;
    return elements_.empty() ? c : Point3(c / static_cast<double>(elements_.size()));
}

Point3 ArrayGeometry::linear_axis() const
{
    if (elements_.size() < 2)
        return Point3::Zero();
    const Point3 axis = (elements_.back() - elements_.front()).normalized();
    const Point3 origin = elements_.front();
    for (const auto& p : elements_) {
        const Point3 d = p - origin;
        if ((d - d.dot(axis) * axis).norm() > 1e-9 * std::max(1.0, d.norm()))
            throw std::invalid_argument("ArrayGeometry: elements are not collinear");
    }
    return axis;
}

ArrayGeometry build_ula(const Point3& center, int count, double spacing, const Point3& axis)
{
    if (count < 1)
        throw std::invalid_argument("build_ula: count must be >= 1");
    if (!(spacing > 0.0))
        throw std::invalid_argument("build_ula: spacing must be > 0");
    const double len = axis.norm();
    if (!(len > 0.0) || !std::isfinite(len))
        throw std::invalid_argument("build_ula: axis must be a non-zero finite vector");
    const Point3 unit = axis / len;

    std::vector<Point3> pts;
    pts.reserve(static_cast<std::size_t>(count));
    const double mid = 0.5 * static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i)
        pts.emplace_back(center + (static_cast<double>(i) - mid) * spacing * unit);
    return ArrayGeometry(std::move(pts));
}

Point3 image_point(const Point3& p, double reflector_x)
{
    return {2.0 * reflector_x - p.x(), p.y(), p.z()};
}

double GammaScheme::separation() const
{
    double acc = 0.0;
    for (std::size_t j = 0; j < gamma0.size() && j < gamma1.size(); ++j) {
        const double d = gamma1[j] - gamma0[j];
        acc += d * d;
    }
    return acc;
}

void GammaScheme::validate() const
{
    if (gamma0.empty())
        throw std::invalid_argument("gamma0: at least one slot required");
    if (gamma0.size() != gamma1.size())
        throw std::invalid_argument("gamma1: length must match gamma0");
    for (std::size_t j = 0; j < gamma0.size(); ++j) {
        if (!(std::abs(gamma0[j]) <= 1.0))
            throw std::invalid_argument("gamma0[" + std::to_string(j) + "]: |gamma| must be <= 1");
        if (!(std::abs(gamma1[j]) <= 1.0))
            throw std::invalid_argument("gamma1[" + std::to_string(j) + "]: |gamma| must be <= 1");
    }
    if (!(separation() > 0.0))
        throw std::invalid_argument("gamma1: must differ from gamma0 in at least one slot");
}

GammaScheme GammaScheme::antipodal(std::size_t slots)
{
    return {std::vector<double>(slots, -1.0), std::vector<double>(slots, 1.0)};
}

void SceneConfig::validate() const
{
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw std::invalid_argument("wavelength: must be > 0");
    if (ce_array.size() == 0)
        throw std::invalid_argument("ce_array: at least one element required");
    if (reader_array.size() == 0)
        throw std::invalid_argument("reader_array: at least one element required");
    if (!bde_position.allFinite())
        throw std::invalid_argument("bde_position: must be finite");
    for (std::size_t i = 0; i < reflector_x.size(); ++i)
        if (!std::isfinite(reflector_x[i]))
            throw std::invalid_argument("reflector_x[" + std::to_string(i) + "]: must be finite");
    if (!(g_smc >= 0.0 && g_smc <= 1.0))
        throw std::invalid_argument("g_smc: must lie in [0, 1]");
    if (!(p_max > 0.0) || !std::isfinite(p_max))
        throw std::invalid_argument("p_max: must be > 0");
    gammas.validate();
    for (std::size_t i = 0; i < alphas_db.size(); ++i)
        if (std::isnan(alphas_db[i]) || alphas_db[i] == std::numeric_limits<double>::infinity())
            throw std::invalid_argument("alpha_db[" + std::to_string(i) + "]: must be finite or -inf");
}

SceneConfig SceneConfig::reference()
{
    SceneConfig s;
    s.wavelength = 0.1;
    const Point3 x_axis(1.0, 0.0, 0.0);
    s.ce_array = build_ula(Point3(0.0, 0.0, 0.0), 16, 0.5 * s.wavelength, x_axis);
    s.reader_array = build_ula(Point3(0.0, 8.0, 0.0), 16, 0.5 * s.wavelength, x_axis);
    s.alphas_db = {-std::numeric_limits<double>::infinity(), 33.0, 39.2};
    return s;
}

}  // namespace bibeam
