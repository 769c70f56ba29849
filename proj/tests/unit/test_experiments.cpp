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

#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bibeam;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool same_scene(const SceneConfig& a, const SceneConfig& b)
{
    auto same_array = [](const ArrayGeometry& x, const ArrayGeometry& y) {
        if (x.size() != y.size())
            return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != y[i])
                return false;
        return true;
    };
    return a.wavelength == b.wavelength && same_array(a.ce_array, b.ce_array) &&
           same_array(a.reader_array, b.reader_array) && a.bde_position == b.bde_position &&
           a.reflector_x == b.reflector_x && a.g_smc == b.g_smc && a.p_max == b.p_max &&
           a.gammas.gamma0 == b.gammas.gamma0 && a.gammas.gamma1 == b.gammas.gamma1 && a.alphas_db == b.alphas_db;
}

std::string scene_error_field(std::string_view text)
{
    try {
        (void)parse_scene_text(text);
    } catch (const SceneError& ex) {
        return ex.field();
    }
    return "<accepted>";
}

std::filesystem::path scratch_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("bibeam_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<double> numeric_column(const CsvTable& t, std::string_view name)
{
    const auto c = t.column(name);
    std::vector<double> out;
    for (const auto& r : t.rows)
        out.push_back(r[c] == "-inf" ? kNegInf : std::stod(r[c]));
    return out;
}

}  // namespace

TEST_CASE("empty scene text yields the default scene")
{
    const SceneConfig s = parse_scene_text("");
    CHECK(same_scene(s, SceneConfig::reference()));
    CHECK(same_scene(parse_scene_text("# only a comment\n\n   \n"), SceneConfig::reference()));
    CHECK(s.ce_count() == 16);
    CHECK(s.reader_count() == 16);
    CHECK(s.wavelength == 0.1);
    CHECK(s.bde_position == Point3(0.0, 2.0, 0.0));
    REQUIRE(s.alphas_db.size() == 3);
    CHECK(s.alphas_db[0] == kNegInf);
}

TEST_CASE("scene overrides")
{
    const SceneConfig s = parse_scene_text("bde_position = 1.5, 2, 0   # offset tag\n"
                                           "alpha_db = 18.2\n");
    CHECK(s.bde_position == Point3(1.5, 2.0, 0.0));
    REQUIRE(s.alphas_db.size() == 1);
    CHECK(s.alphas_db[0] == 18.2);

    const SceneConfig t = parse_scene_text("wavelength = 0.2\nce_count = 4\nce_spacing = 0.3\n"
                                           "reader_center = 1, 9, 0\narray_axis = 0, 0, 1\n"
                                           "slots = 2\ng_smc = 0\nreflector_x = 3\np_max = 2.5\n");
    CHECK(t.wavelength == 0.2);
    REQUIRE(t.ce_count() == 4);
    CHECK((t.ce_array[1] - t.ce_array[0]).norm() == doctest::Approx(0.3));
    CHECK(t.ce_array.linear_axis().isApprox(Point3::UnitZ()));
    CHECK(t.reader_array.centroid().isApprox(Point3(1.0, 9.0, 0.0)));
    // Reader pitch follows the new wavelength.
    CHECK((t.reader_array[1] - t.reader_array[0]).norm() == doctest::Approx(0.1));
    CHECK(t.gammas.slots() == 2);
    CHECK(t.g_smc == 0.0);
    CHECK(t.reflector_x == std::vector<double>{3.0});
    CHECK(t.p_max == 2.5);

    const SceneConfig u = parse_scene_text("ce_elements = 0, 0, 0; 0.05, 0, 0; 0.1, 0.02, 0\n"
                                           "gamma0 = 0, 0.5\ngamma1 = 1, -0.5\n");
    CHECK(u.ce_count() == 3);
    CHECK(u.ce_array[2] == Point3(0.1, 0.02, 0.0));
    CHECK(u.gammas.gamma1 == std::vector<double>{1.0, -0.5});
}

TEST_CASE("scene schema errors name the field")
{
    CHECK(scene_error_field("wavelength = -0.1") == "scene.wavelength (line 1)");
    CHECK(scene_error_field("\nwavelength = abc") == "scene.wavelength (line 2)");
    CHECK(scene_error_field("colour = red") == "scene.colour (line 1)");
    CHECK(scene_error_field("p_max = 1\np_max = 2") == "scene.p_max (line 2)");
    CHECK(scene_error_field("p_max 1") == "scene (line 1)");
    CHECK(scene_error_field("g_smc = 1.5") == "scene.g_smc (line 1)");
    CHECK(scene_error_field("bde_position = 1, 2") == "scene.bde_position (line 1)");
    CHECK(scene_error_field("ce_count = 2.5") == "scene.ce_count (line 1)");
    CHECK(scene_error_field("ce_spacing = 0") == "scene.ce_spacing (line 1)");
    CHECK(scene_error_field("gamma0 = 1") == "scene.gamma0 (line 1)");
    CHECK(scene_error_field("gamma0 = 1\ngamma1 = 1") == "scene.gamma1 (line 2)");
    CHECK(scene_error_field("slots = 2\ngamma0 = -1\ngamma1 = 1") == "scene.gamma0 (line 2)");
    CHECK(scene_error_field("alpha_db = inf") == "scene.alpha_db (line 1)");
    CHECK(scene_error_field("ce_elements = 0,0,0; 0,0,0") == "scene.ce_elements (line 1)");
    CHECK(scene_error_field("ce_elements = 0,0,0\nce_count = 2") == "scene.ce_elements (line 1)");
    CHECK(scene_error_field("bde_position = -0.375, 0, 0") == "<accepted>");

    try {
        (void)parse_scene_text("wavelength = -1");
        FAIL("expected SceneError");
    } catch (const SceneError& ex) {
        CHECK(std::string(ex.what()) == "scene.wavelength (line 1): must be > 0");
    }
    CHECK_THROWS_AS(parse_scene("/nonexistent/bibeam.scene"), SceneError);
}

TEST_CASE("parse_db")
{
    CHECK(parse_db("-inf") == kNegInf);
    CHECK(parse_db(" 39.2 ") == 39.2);
    CHECK(parse_db("0") == 0.0);
    CHECK_THROWS_AS(parse_db("inf"), SceneError);
    CHECK_THROWS_AS(parse_db("x"), SceneError);
    CHECK_THROWS_AS(parse_db(""), SceneError);
}

TEST_CASE("format_scene round trip")
{
    oracle::Rng rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        SceneConfig s = SceneConfig::reference();
        s.wavelength = rng.uniform(0.01, 1.0);
        s.ce_array = build_ula(Point3(rng.normal(), rng.normal(), 0.0), rng.integer(1, 9), rng.uniform(0.01, 0.3),
                               Point3(rng.normal(), rng.normal(), rng.normal()));
        s.bde_position = Point3(rng.normal(), 3.0 + rng.normal(), rng.normal());
        s.reflector_x = {rng.normal(), rng.normal(), rng.normal()};
        s.g_smc = rng.uniform(0.0, 1.0);
        s.p_max = rng.uniform(0.1, 10.0);
        s.gammas = GammaScheme{{rng.uniform(-1, 0), rng.uniform(-1, 0)}, {rng.uniform(0, 1), rng.uniform(0, 1)}};
        s.alphas_db = {kNegInf, rng.uniform(-10, 50)};
        const std::string text = format_scene(s);
        const SceneConfig back = parse_scene_text(text);
        CHECK(same_scene(back, s));
        CHECK(format_scene(back) == text);
    }
    SceneConfig none = SceneConfig::reference();
    none.alphas_db.clear();
    CHECK(parse_scene_text(format_scene(none)).alphas_db.empty());
}

TEST_CASE("format_number")
{
    CHECK(format_number(kNegInf) == "-inf");
    CHECK(format_number(-kNegInf) == "inf");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(-35.46634721212345) == "-35.4663472121");
    CHECK(format_number(1234567.891234567) == "1234567.89123");
}

TEST_CASE("CsvTable")
{
    CsvTable t{{"a_db", "b"}, {{"1", "x"}, {"-inf", "y"}}};
    CHECK(t.str() == "a_db,b\n1,x\n-inf,y\n");
    CHECK(t.column("b") == 1);
    CHECK_THROWS_AS((void)t.column("c"), std::out_of_range);
    const auto dir = scratch_dir("csv");
    t.write(dir / "t.csv");
    CHECK(slurp(dir / "t.csv") == t.str());
    CHECK_THROWS_AS(t.write(dir / "missing" / "t.csv"), std::runtime_error);
}

TEST_CASE("summary rows for the default scene")
{
    const SceneConfig s = SceneConfig::reference();
    const CsvTable t = run_summary(s, s.alphas_db);
    CHECK(t.header == std::vector<std::string>{"method", "alpha_db", "eta_db", "pg_bde_db", "objective_db"});
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0][0] == "MRT");
    CHECK(t.rows[0][1] == "nan");
    CHECK(t.rows[1][0] == "NullSpace");
    CHECK(t.rows[1][1] == "-inf");
    CHECK(t.rows[2][0] == "SDR");
    CHECK(t.rows[2][1] == "33");
    CHECK(t.rows[3][1] == "39.2");

    const auto eta = numeric_column(t, "eta_db");
    const auto pg = numeric_column(t, "pg_bde_db");
    CHECK(std::abs(eta[0] - 40.9) < 0.05);
    CHECK(std::abs(pg[0] + 35.5) < 0.05);
    CHECK(std::abs(pg[1] + 45.9) < 0.05);
    CHECK(std::abs(eta[2] - 33.0) < 1e-3);
    CHECK(std::abs(pg[2] + 38.0) < 0.05);
    CHECK(std::abs(eta[3] - 39.2) < 1e-3);
    CHECK(std::abs(pg[3] + 35.7) < 0.1);
}

TEST_CASE("pattern and pgmap tables")
{
    const SceneConfig s = SceneConfig::reference();
    const std::vector<double> alphas{33.0};

    const CsvTable pat = run_pattern(s, alphas, PatternOptions{-90.0, 90.0, 1.0});
    CHECK(pat.header == std::vector<std::string>{"theta_deg", "method", "alpha_db", "et_db"});
    CHECK(pat.rows.size() == 2 * 181);
    CHECK(pat.rows.front()[0] == "-90");
    CHECK(pat.rows[180][0] == "90");
    CHECK(pat.rows[181][1] == "SDR");
    CHECK_THROWS_AS(run_pattern(s, alphas, PatternOptions{0.0, 1.0, 0.0}), std::invalid_argument);

    GridSpec grid{-0.5, 0.5, 1.5, 2.5, 0.0, 0.25};
    const CsvTable map = run_pgmap(s, alphas, grid);
    CHECK(map.header == std::vector<std::string>{"x_m", "y_m", "method", "alpha_db", "pg_db"});
    CHECK(map.rows.size() == 2 * 25);
    // The BDE cell matches the summary value to the printed precision.
    const CsvTable sum = run_summary(s, alphas);
    bool found = false;
    for (const auto& r : map.rows) {
        if (r[0] == "0" && r[1] == "2" && r[2] == "SDR") {
            CHECK(r[4] == sum.rows[1][3]);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("pe table columns and content")
{
    const SceneConfig s = SceneConfig::reference();
    const std::vector<double> alphas{kNegInf, 33.0};

    PeOptions closed;
    const CsvTable cf = run_pe(s, alphas, closed);
    CHECK(cf.header == std::vector<std::string>{"snr_db", "method", "alpha_db", "pe_closed_form"});
    CHECK(cf.rows.size() == 3 * 81);
    const auto pe = numeric_column(cf, "pe_closed_form");
    for (std::size_t m = 0; m < 3; ++m) {
        for (std::size_t i = 1; i < 81; ++i)
            CHECK(pe[m * 81 + i] < pe[m * 81 + i - 1]);
        CHECK(pe[m * 81] > 0.3);
    }
    // MRT needs the least SNR, full cancellation the most.
    CHECK(pe[40] < pe[81 * 2 + 40]);
    CHECK(pe[81 * 2 + 40] < pe[81 + 40]);

    PeOptions mc{-20.0, -10.0, 5.0, 20000, 5, 1};
    const CsvTable with_mc = run_pe(s, alphas, mc);
    CHECK(with_mc.header == std::vector<std::string>{"snr_db", "method", "alpha_db", "pe_closed_form",
                                                     "pe_monte_carlo", "trials", "ci95"});
    REQUIRE(with_mc.rows.size() == 9);
    for (const auto& r : with_mc.rows) {
        CHECK(r[5] == "20000");
        const double p = std::stod(r[3]);
        const double est = std::stod(r[4]);
        CHECK(std::abs(est - p) <= 4.0 * std::sqrt(p * (1 - p) / 20000.0) + 1e-4);
    }

    mc.workers = 3;
    CHECK(run_pe(s, alphas, mc).str() == with_mc.str());

    CHECK_THROWS_AS((void)PeOptions({0.0, -1.0, 1.0}).snr_grid(), std::invalid_argument);
}

TEST_CASE("manifest round trip and replay")
{
    SceneConfig s = parse_scene_text("bde_position = 1.5, 2, 0\n");
    RunRequest req;
    req.subcommand = "pe";
    req.scene_file = "offset.scene";
    req.output_dir = scratch_dir("manifest").string();
    req.alphas_db = {kNegInf, 18.2, 0.1 + 0.2};
    req.pe = PeOptions{-30.0, -10.0, 2.5, 5000, 42, 2};
    req.pattern = PatternOptions{-45.0, 45.0, 0.3};
    req.grid = GridSpec{-1.0, 1.0, 0.5, 3.5, 0.1, 0.07};

    const std::string text = manifest_json(req, s);
    const LoadedManifest back = parse_manifest(text);
    CHECK(back.request.subcommand == req.subcommand);
    CHECK(back.request.scene_file == req.scene_file);
    CHECK(back.request.output_dir == req.output_dir);
    CHECK(back.request.alphas_db == req.alphas_db);
    CHECK(back.request.pe.seed == 42);
    CHECK(back.request.pe.trials == 5000);
    CHECK(back.request.pe.snr_step_db == 2.5);
    CHECK(back.request.pattern.theta_step_deg == 0.3);
    CHECK(back.request.grid.step == 0.07);
    CHECK(back.request.grid.z == 0.1);
    CHECK(same_scene(back.scene, s));
    // Worker count is not part of the manifest.
    CHECK(back.request.pe.workers == 0);
    CHECK(manifest_json(back.request, back.scene) == text);

    const auto csv = run_and_write(req, s);
    CHECK(csv.filename() == "pe.csv");
    CHECK(std::filesystem::exists(csv.parent_path() / "pe.manifest.json"));
    const std::string first = slurp(csv);

    LoadedManifest replay = parse_manifest(slurp(csv.parent_path() / "pe.manifest.json"));
    replay.request.output_dir = scratch_dir("manifest_replay").string();
    replay.request.pe.workers = 1;
    const auto again = run_and_write(replay.request, replay.scene);
    CHECK(slurp(again) == first);

    CHECK_THROWS_AS(parse_manifest("{"), std::runtime_error);
    CHECK_THROWS_AS(parse_manifest("{\"subcommand\": \"pe\"}"), std::runtime_error);
    RunRequest bad = req;
    bad.subcommand = "plot";
    CHECK_THROWS_AS(execute(bad, s), std::invalid_argument);
    CHECK(!version().empty());
}

TEST_CASE("design_methods ordering")
{
    const auto ch = synth_channels(SceneConfig::reference());
    const std::vector<double> alphas{30.0, kNegInf};
    const auto methods = design_methods(ch, alphas, 2.0);
    REQUIRE(methods.size() == 3);
    CHECK(methods[0].method == BeamMethod::Mrt);
    CHECK(methods[1].method == BeamMethod::Sdr);
    CHECK(methods[2].method == BeamMethod::NullSpace);
    for (const auto& m : methods)
        CHECK(m.x.squaredNorm() == doctest::Approx(2.0));
}
