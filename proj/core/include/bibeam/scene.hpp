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

#ifndef BIBEAM_SCENE_HPP
#define BIBEAM_SCENE_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace bibeam {

using Point3 = Eigen::Vector3d;

/// Antenna element positions in meters. At least one element, all
/// positions pairwise distinct.
class ArrayGeometry {
public:
    ArrayGeometry() = default;
    explicit ArrayGeometry(std::vector<Point3> elements);

    [[nodiscard]] std::size_t size() const { return elements_.size(); }
    [[nodiscard]] const Point3& operator[](std::size_t i) const { return elements_[i]; }
    [[nodiscard]] const std::vector<Point3>& elements() const { return elements_; }
    [[nodiscard]] Point3 centroid() const;

    /// Unit vector along the array when every element lies on one line,
    /// zero vector for a single element. Throws std::invalid_argument for
    /// non-collinear layouts.
    [[nodiscard]] Point3 linear_axis() const;

private:
    std::vector<Point3> elements_;
};

/// Uniform linear array of `count` elements at pitch `spacing`, placed
/// symmetrically about `center` along `axis` (normalized internally).
ArrayGeometry build_ula(const Point3& center, int count, double spacing, const Point3& axis);

/// Mirror of `p` in the plane x = reflector_x.
Point3 image_point(const Point3& p, double reflector_x);

/// Reflection coefficients per slot under bit 0 and bit 1.
struct GammaScheme {
    std::vector<double> gamma0;
    std::vector<double> gamma1;

    [[nodiscard]] std::size_t slots() const { return gamma0.size(); }
    /// sum_j (gamma1_j - gamma0_j)^2
    [[nodiscard]] double separation() const;
    /// Throws std::invalid_argument on length mismatch, empty sequences,
    /// |gamma| > 1 or zero separation.
    void validate() const;

    static GammaScheme antipodal(std::size_t slots = 1);
};

struct SceneConfig {
    double wavelength = 0.1;
    ArrayGeometry ce_array;
    ArrayGeometry reader_array;
    Point3 bde_position{0.0, 2.0, 0.0};
    std::vector<double> reflector_x{2.0, -2.0};
    double g_smc = 0.5;
    double p_max = 1.0;
    GammaScheme gammas = GammaScheme::antipodal(1);
    /// Default design targets in dB; -inf selects full DLI cancellation.
    std::vector<double> alphas_db;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    [[nodiscard]] std::size_t ce_count() const { return ce_array.size(); }
    [[nodiscard]] std::size_t reader_count() const { return reader_array.size(); }

    /// 16-element half-wavelength ULAs along x centred at the origin (CE) and
    /// (0, 8, 0) (reader), BDE at (0, 2, 0), reflectors at x = +/-2 m.
    static SceneConfig reference();
};

}  // namespace bibeam

#endif  // BIBEAM_SCENE_HPP
