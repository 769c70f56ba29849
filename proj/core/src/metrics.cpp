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

#include "bibeam/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bibeam {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> lattice(double lo, double hi, double step)
{
    if (!(step > 0.0) || !(hi >= lo))
        throw std::invalid_argument("GridSpec: need step > 0 and max >= min");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = lo + static_cast<double>(i) * step;
    return out;
}

}  // namespace

double eta_db(const ChannelSet& channels, const CVec& x)
{
    const double backscatter = (channels.h_bd * x).squaredNorm();
    if (!(backscatter > 0.0))
        throw std::domain_error("eta_db: zero backscatter power");
    const double ratio = (channels.h_dl * x).squaredNorm() / backscatter;
    if (ratio < kEtaFloorRatio)
        return kNegInf;
    return 10.0 * std::log10(ratio);
}

double path_gain_db(const SceneConfig& scene, const CVec& x, const Point3& point)
{
    const double power = x.squaredNorm();
    if (!(power > 0.0))
        throw std::invalid_argument("path_gain_db: zero transmit vector");
    CVec h;
    try {
        h = point_channel(scene, point);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("path_gain_db: point coincides with a CE element");
    }
    const double gain = std::norm((h.array() * x.array()).sum()) / power;
    return gain > 0.0 ? 10.0 * std::log10(gain) : kNegInf;
}

std::vector<double> GridSpec::xs() const
{
    return lattice(x_min, x_max, step);
}

std::vector<double> GridSpec::ys() const
{
    return lattice(y_min, y_max, step);
}

PathGainMap path_gain_map(const SceneConfig& scene, const CVec& x, const GridSpec& grid)
{
    PathGainMap map;
    map.xs = grid.xs();
    map.ys = grid.ys();
    map.z = grid.z;
    map.pg_db.resize(map.xs.size() * map.ys.size());
    const double exclusion = 0.25 * scene.wavelength;
    for (std::size_t iy = 0; iy < map.ys.size(); ++iy) {
        for (std::size_t ix = 0; ix < map.xs.size(); ++ix) {
            const Point3 p(map.xs[ix], map.ys[iy], grid.z);
            bool near_element = false;
            for (const auto& e : scene.ce_array.elements())
                near_element = near_element || (e - p).norm() < exclusion;
            map.pg_db[iy * map.xs.size() + ix] = near_element ? kNegInf : path_gain_db(scene, x, p);
        }
    }
    return map;
}

std::vector<double> radiation_pattern(const CVec& x, const ArrayGeometry& array, double wavelength,
                                      std::span<const double> thetas)
{
    if (static_cast<std::size_t>(x.size()) != array.size())
        throw std::invalid_argument("radiation_pattern: x length must match the array size");
    std::vector<double> out;
    out.reserve(thetas.size());
    for (double theta : thetas)
        out.push_back(std::norm((steering_vector(theta, array, wavelength).array() * x.array()).sum()));
    return out;
}

}  // namespace bibeam
