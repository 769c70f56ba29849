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

#include "bibeam/experiments.hpp"

#include "bibeam/detection.hpp"
#include "bibeam/scene_file.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

#ifndef BIBEAM_VERSION
#define BIBEAM_VERSION "0.0.0"
#endif

namespace bibeam {

namespace {

using json = nlohmann::json;

std::string exact_number(double v)
{
    if (std::isinf(v))
        return v < 0 ? "-inf" : "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string method_label(const BeamformerOutput& b)
{
    return std::string(to_string(b.method));
}

double db(double linear)
{
    return linear > 0.0 ? 10.0 * std::log10(linear) : -std::numeric_limits<double>::infinity();
}

}  // namespace

std::string_view version()
{
    return BIBEAM_VERSION;
}

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v < 0 ? "-inf" : "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string CsvTable::str() const
{
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(header);
    for (const auto& r : rows)
        line(r);
    return out;
}

std::size_t CsvTable::column(std::string_view name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    throw std::out_of_range("CsvTable: no column '" + std::string(name) + "'");
}

void CsvTable::write(const std::filesystem::path& file) const
{
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write '" + file.string() + "'");
    out << str();
}

std::vector<BeamformerOutput> design_methods(const ChannelSet& channels, std::span<const double> alphas_db,
                                             double p_max)
{
    std::vector<BeamformerOutput> out;
    out.reserve(alphas_db.size() + 1);
    out.push_back(mrt(channels, p_max));
    for (double a : alphas_db)
        out.push_back(design_beamformer(channels, a, p_max));
    return out;
}

CsvTable run_summary(const SceneConfig& scene, std::span<const double> alphas_db)
{
    const ChannelSet channels = synth_channels(scene);
    CsvTable table;
    table.header = {"method", "alpha_db", "eta_db", "pg_bde_db", "objective_db"};
    for (const auto& b : design_methods(channels, alphas_db, scene.p_max))
        table.rows.push_back({method_label(b), format_number(b.alpha_db), format_number(b.achieved_eta_db),
                              format_number(path_gain_db(scene, b.x, scene.bde_position)),
                              format_number(db(b.objective))});
    return table;
}

CsvTable run_pattern(const SceneConfig& scene, std::span<const double> alphas_db, const PatternOptions& options)
{
    if (!(options.theta_step_deg > 0.0) || !(options.theta_max_deg >= options.theta_min_deg))
        throw std::invalid_argument("run_pattern: need theta step > 0 and max >= min");
    const ChannelSet channels = synth_channels(scene);
    const auto count = static_cast<std::size_t>(
                           std::floor((options.theta_max_deg - options.theta_min_deg) / options.theta_step_deg + 1e-9)) +
                       1;
    std::vector<double> degrees(count);
    std::vector<double> radians(count);
    for (std::size_t i = 0; i < count; ++i) {
        degrees[i] = options.theta_min_deg + static_cast<double>(i) * options.theta_step_deg;
        radians[i] = degrees[i] * std::numbers::pi / 180.0;
    }

    CsvTable table;
    table.header = {"theta_deg", "method", "alpha_db", "et_db"};
    for (const auto& b : design_methods(channels, alphas_db, scene.p_max)) {
        const auto pattern = radiation_pattern(b.x, scene.ce_array, scene.wavelength, radians);
        for (std::size_t i = 0; i < count; ++i)
            table.rows.push_back(
                {format_number(degrees[i]), method_label(b), format_number(b.alpha_db), format_number(db(pattern[i]))});
    }
    return table;
}

CsvTable run_pgmap(const SceneConfig& scene, std::span<const double> alphas_db, const GridSpec& grid)
{
    const ChannelSet channels = synth_channels(scene);
    CsvTable table;
    table.header = {"x_m", "y_m", "method", "alpha_db", "pg_db"};
    for (const auto& b : design_methods(channels, alphas_db, scene.p_max)) {
        const PathGainMap map = path_gain_map(scene, b.x, grid);
        for (std::size_t iy = 0; iy < map.ys.size(); ++iy)
            for (std::size_t ix = 0; ix < map.xs.size(); ++ix)
                table.rows.push_back({format_number(map.xs[ix]), format_number(map.ys[iy]), method_label(b),
                                      format_number(b.alpha_db), format_number(map.at(ix, iy))});
    }
    return table;
}

std::vector<double> PeOptions::snr_grid() const
{
    if (!(snr_step_db > 0.0) || !(snr_max_db >= snr_min_db))
        throw std::invalid_argument("snr grid: need step > 0 and max >= min");
    const auto count = static_cast<std::size_t>(std::floor((snr_max_db - snr_min_db) / snr_step_db + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = snr_min_db + static_cast<double>(i) * snr_step_db;
    return out;
}

CsvTable run_pe(const SceneConfig& scene, std::span<const double> alphas_db, const PeOptions& options)
{
    const ChannelSet channels = synth_channels(scene);
    const auto grid = options.snr_grid();
    const bool with_mc = options.trials > 0;

    CsvTable table;
    table.header = {"snr_db", "method", "alpha_db", "pe_closed_form"};
    if (with_mc)
        table.header.insert(table.header.end(), {"pe_monte_carlo", "trials", "ci95"});

    const auto methods = design_methods(channels, alphas_db, 1.0);
    const std::size_t slots = scene.gammas.slots();
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        const auto& b = methods[mi];
        for (std::size_t si = 0; si < grid.size(); ++si) {
            const double power = power_for_snr_db(grid[si], slots, channels);
            const CVec x = std::sqrt(power) * b.x;
            std::vector<std::string> row{format_number(grid[si]), method_label(b), format_number(b.alpha_db),
                                         format_number(closed_form_pe(scene.gammas, channels.h_bd, x))};
            if (with_mc) {
                McOptions mc;
                mc.stream = static_cast<std::uint64_t>(mi) * 1000000u + si;
                mc.workers = options.workers;
                const McResult r = monte_carlo_pe(channels, x, scene.gammas, options.trials, options.seed, mc);
                row.push_back(format_number(r.estimate));
                row.push_back(std::to_string(r.trials));
                row.push_back(format_number(r.ci_halfwidth_95));
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

CsvTable execute(const RunRequest& request, const SceneConfig& scene)
{
    const std::span<const double> alphas(request.alphas_db);
    if (request.subcommand == "summary")
        return run_summary(scene, alphas);
    if (request.subcommand == "pattern")
        return run_pattern(scene, alphas, request.pattern);
    if (request.subcommand == "pgmap")
        return run_pgmap(scene, alphas, request.grid);
    if (request.subcommand == "pe")
        return run_pe(scene, alphas, request.pe);
    throw std::invalid_argument("unknown subcommand '" + request.subcommand + "'");
}

std::string manifest_json(const RunRequest& request, const SceneConfig& scene)
{
    json alphas = json::array();
    for (double a : request.alphas_db)
        alphas.push_back(exact_number(a));

    json j;
    j["tool"] = "bibeam";
    j["version"] = std::string(version());
    j["subcommand"] = request.subcommand;
    j["scene_file"] = request.scene_file;
    j["output_dir"] = request.output_dir;
    j["alphas_db"] = alphas;
    j["seed"] = request.pe.seed;
    j["rng"] = std::string(kRngAlgorithm);
    j["pattern"] = {{"theta_min_deg", request.pattern.theta_min_deg},
                    {"theta_max_deg", request.pattern.theta_max_deg},
                    {"theta_step_deg", request.pattern.theta_step_deg}};
    j["grid"] = {{"x_min", request.grid.x_min}, {"x_max", request.grid.x_max}, {"y_min", request.grid.y_min},
                 {"y_max", request.grid.y_max}, {"z", request.grid.z},         {"step", request.grid.step}};
    j["pe"] = {{"snr_min_db", request.pe.snr_min_db},
               {"snr_max_db", request.pe.snr_max_db},
               {"snr_step_db", request.pe.snr_step_db},
               {"trials", request.pe.trials}};
    j["scene"] = format_scene(scene);
    return j.dump(2) + "\n";
}

LoadedManifest parse_manifest(std::string_view json_text)
{
    LoadedManifest out;
    try {
        const json j = json::parse(json_text);
        auto& r = out.request;
        r.subcommand = j.at("subcommand").get<std::string>();
        r.scene_file = j.at("scene_file").get<std::string>();
        r.output_dir = j.at("output_dir").get<std::string>();
        for (const auto& a : j.at("alphas_db"))
            r.alphas_db.push_back(parse_db(a.get<std::string>()));
        r.pe.seed = j.at("seed").get<std::uint64_t>();
        const auto& p = j.at("pattern");
        r.pattern = {p.at("theta_min_deg").get<double>(), p.at("theta_max_deg").get<double>(),
                     p.at("theta_step_deg").get<double>()};
        const auto& g = j.at("grid");
        r.grid = {g.at("x_min").get<double>(), g.at("x_max").get<double>(), g.at("y_min").get<double>(),
                  g.at("y_max").get<double>(), g.at("z").get<double>(),     g.at("step").get<double>()};
        const auto& pe = j.at("pe");
        r.pe.snr_min_db = pe.at("snr_min_db").get<double>();
        r.pe.snr_max_db = pe.at("snr_max_db").get<double>();
        r.pe.snr_step_db = pe.at("snr_step_db").get<double>();
        r.pe.trials = pe.at("trials").get<std::uint64_t>();
        out.scene = parse_scene_text(j.at("scene").get<std::string>());
    } catch (const json::exception& ex) {
        throw std::runtime_error(std::string("malformed manifest: ") + ex.what());
    }
    return out;
}

std::filesystem::path run_and_write(const RunRequest& request, const SceneConfig& scene)
{
    const CsvTable table = execute(request, scene);
    const std::filesystem::path dir(request.output_dir);
    std::filesystem::create_directories(dir);
    const auto csv = dir / (request.subcommand + ".csv");
    table.write(csv);
    std::ofstream manifest(dir / (request.subcommand + ".manifest.json"), std::ios::binary | std::ios::trunc);
    if (!manifest)
        throw std::runtime_error("cannot write manifest in '" + dir.string() + "'");
    manifest << manifest_json(request, scene);
    return csv;
}

}  // namespace bibeam
