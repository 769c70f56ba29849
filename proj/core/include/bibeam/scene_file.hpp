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

#ifndef BIBEAM_SCENE_FILE_HPP
#define BIBEAM_SCENE_FILE_HPP

#include "bibeam/scene.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bibeam {

/// Schema violation in a scene description. what() starts with the field
/// path, e.g. "scene.wavelength (line 3): must be > 0".
class SceneError : public std::runtime_error {
public:
    SceneError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field))
    {
    }
    [[nodiscard]] const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Parses the key = value scene format. Omitted keys take the values of
/// SceneConfig::reference(); an empty text yields that scene.
SceneConfig parse_scene_text(std::string_view text);

/// Reads and parses a scene file. Throws SceneError when the file cannot be
/// opened or violates the schema.
SceneConfig parse_scene(const std::filesystem::path& file);

/// Canonical text for a scene: every field spelled out, arrays as explicit
/// element lists, numbers with 17 significant digits. parse_scene_text on
/// the result reproduces the scene exactly.
std::string format_scene(const SceneConfig& scene);

/// Parses a dB value; accepts "-inf".
double parse_db(std::string_view token);

}  // namespace bibeam

#endif  // BIBEAM_SCENE_FILE_HPP
