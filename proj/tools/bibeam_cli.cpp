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

// bibeam command-line driver: writes figure CSVs plus a run manifest.
//
//   bibeam summary --scene offset.scene --out results/ --alpha -inf --alpha 33
//   bibeam pe --out results/ --trials 1000000 --seed 7
//   bibeam replay --manifest results/pe.manifest.json --out rerun/

#include <bibeam/experiments.hpp>
#include <bibeam/scene_file.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct CommonArgs {
    std::string scene;
    std::string out;
    std::vector<std::string> alphas;
    unsigned threads = 0;
};

void add_common(CLI::App* sub, CommonArgs& args)
{
    sub->add_option("--scene", args.scene, "Scene file (key = value); reference scene when omitted");
    sub->add_option("--out", args.out, "Output directory")->required();
    sub->add_option("--alpha", args.alphas, "Design target in dB, repeatable; '-inf' for full cancellation")
        ->allow_extra_args(false);
}

bibeam::SceneConfig load_scene(const std::string& path)
{
    return path.empty() ? bibeam::parse_scene_text("") : bibeam::parse_scene(path);
}

int run(bibeam::RunRequest request, const bibeam::SceneConfig& scene, const std::vector<std::string>& alpha_tokens)
{
    if (!alpha_tokens.empty()) {
        request.alphas_db.clear();
        for (const auto& tok : alpha_tokens)
            request.alphas_db.push_back(bibeam::parse_db(tok));
    } else if (request.alphas_db.empty()) {
        request.alphas_db = scene.alphas_db;
    }
    const auto csv = bibeam::run_and_write(request, scene);
    std::cout << "wrote " << csv.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Transmit beamforming for bistatic backscatter: figure CSV generator"};
    app.set_version_flag("--version", std::string(bibeam::version()));
    app.require_subcommand(1);

    CommonArgs common;
    bibeam::RunRequest request;

    auto* pattern = app.add_subcommand("pattern", "Radiation pattern E_t(theta) of the CE array");
    add_common(pattern, common);
    pattern->add_option("--theta-min", request.pattern.theta_min_deg, "Start angle in degrees");
    pattern->add_option("--theta-max", request.pattern.theta_max_deg, "End angle in degrees");
    pattern->add_option("--theta-step", request.pattern.theta_step_deg, "Angle step in degrees");

    auto* pgmap = app.add_subcommand("pgmap", "Path gain over a rectangular x-y grid");
    add_common(pgmap, common);
    pgmap->add_option("--x-min", request.grid.x_min, "Grid x start (m)");
    pgmap->add_option("--x-max", request.grid.x_max, "Grid x end (m)");
    pgmap->add_option("--y-min", request.grid.y_min, "Grid y start (m)");
    pgmap->add_option("--y-max", request.grid.y_max, "Grid y end (m)");
    pgmap->add_option("--z", request.grid.z, "Grid plane height (m)");
    pgmap->add_option("--grid-step", request.grid.step, "Grid pitch (m)");

    auto* pe = app.add_subcommand("pe", "Error probability versus SNR (closed form and Monte Carlo)");
    add_common(pe, common);
    pe->add_option("--snr-min", request.pe.snr_min_db, "First SNR point (dB)");
    pe->add_option("--snr-max", request.pe.snr_max_db, "Last SNR point (dB)");
    pe->add_option("--snr-step", request.pe.snr_step_db, "SNR step (dB)");
    pe->add_option("--trials", request.pe.trials, "Monte Carlo trials per point (0 = closed form only)");
    pe->add_option("--seed", request.pe.seed, "Monte Carlo seed");
    pe->add_option("--threads", common.threads, "Worker threads (0 = all cores); does not change results");

    auto* summary = app.add_subcommand("summary", "eta and path gain at the BDE per method");
    add_common(summary, common);

    std::string manifest_path;
    std::string replay_out;
    auto* replay = app.add_subcommand("replay", "Re-run a previous invocation from its manifest");
    replay->add_option("--manifest", manifest_path, "Manifest JSON written next to a CSV")->required();
    replay->add_option("--out", replay_out, "Output directory (defaults to the recorded one)");
    replay->add_option("--threads", common.threads, "Worker threads for Monte Carlo");

    CLI11_PARSE(app, argc, argv);

    try {
        if (replay->parsed()) {
            std::ifstream in(manifest_path, std::ios::binary);
            if (!in)
                throw std::runtime_error("cannot open manifest '" + manifest_path + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            auto loaded = bibeam::parse_manifest(buf.str());
            if (!replay_out.empty())
                loaded.request.output_dir = replay_out;
            loaded.request.pe.workers = common.threads;
            return run(loaded.request, loaded.scene, {});
        }

        CLI::App* chosen = app.get_subcommands().front();
        request.subcommand = chosen->get_name();
        request.scene_file = common.scene;
        request.output_dir = common.out;
        request.pe.workers = common.threads;
        const auto scene = load_scene(common.scene);
        return run(request, scene, common.alphas);
    } catch (const bibeam::SceneError& ex) {
        std::cerr << "scene error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}
