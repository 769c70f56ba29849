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

#ifndef BIBEAM_EXPERIMENTS_HPP
#define BIBEAM_EXPERIMENTS_HPP

#include "bibeam/beamforming.hpp"
#include "bibeam/metrics.hpp"
#include "bibeam/scene.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace bibeam {

/// Tool version recorded in every run manifest.
std::string_view version();

/// 12 significant digits; infinities as "inf"/"-inf", NaN as "nan".
std::string format_number(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::size_t column(std::string_view name) const;  ///< throws std::out_of_range
    void write(const std::filesystem::path& file) const;
};

/// MRT first, then one design per alpha (dB, -inf allowed), all at the
/// given power.
std::vector<BeamformerOutput> design_methods(const ChannelSet& channels, std::span<const double> alphas_db,
                                             double p_max);

/// method, alpha_db, eta_db, pg_bde_db, objective_db
CsvTable run_summary(const SceneConfig& scene, std::span<const double> alphas_db);

struct PatternOptions {
    double theta_min_deg = -90.0;
    double theta_max_deg = 90.0;
    double theta_step_deg = 0.5;
};

/// theta_deg, method, alpha_db, et_db (E_t of the CE array in the x-y plane)
CsvTable run_pattern(const SceneConfig& scene, std::span<const double> alphas_db, const PatternOptions& options = {});

/// x_m, y_m, method, alpha_db, pg_db
CsvTable run_pgmap(const SceneConfig& scene, std::span<const double> alphas_db, const GridSpec& grid = {});

struct PeOptions {
    double snr_min_db = -40.0;
    double snr_max_db = 0.0;
    double snr_step_db = 0.5;
    std::uint64_t trials = 0;  ///< 0 = closed form only
    std::uint64_t seed = 1;
    unsigned workers = 0;      ///< not part of the manifest; output does not depend on it

    [[nodiscard]] std::vector<double> snr_grid() const;
};

/// snr_db, method, alpha_db, pe_closed_form[, pe_monte_carlo, trials, ci95].
/// Each beamformer direction is designed once at unit power and scaled to
/// the power that realizes every SNR point (noise variance stays 1).
CsvTable run_pe(const SceneConfig& scene, std::span<const double> alphas_db, const PeOptions& options = {});

/// Everything needed to reproduce one CLI run.
struct RunRequest {
    std::string subcommand;  ///< pattern | pgmap | pe | summary
    std::string scene_file;  ///< informational; the resolved scene is stored separately
    std::string output_dir;
    std::vector<double> alphas_db;
    PatternOptions pattern;
    GridSpec grid;
    PeOptions pe;
};

CsvTable execute(const RunRequest& request, const SceneConfig& scene);

/// JSON manifest with the request, the tool version, the RNG description
/// and the canonical scene text.
std::string manifest_json(const RunRequest& request, const SceneConfig& scene);

struct LoadedManifest {
    RunRequest request;
    SceneConfig scene;
};

/// Throws std::runtime_error on malformed manifests.
LoadedManifest parse_manifest(std::string_view json_text);

/// Writes <output_dir>/<subcommand>.csv and <subcommand>.manifest.json and
/// returns the CSV path.
std::filesystem::path run_and_write(const RunRequest& request, const SceneConfig& scene);

}  // namespace bibeam

#endif  // BIBEAM_EXPERIMENTS_HPP
