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

#include "bibeam/scene_file.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace bibeam {

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

const std::set<std::string, std::less<>> kKeys = {
    "wavelength",    "ce_count",     "ce_center",  "ce_spacing",   "ce_elements", "reader_count",
    "reader_center", "reader_spacing", "reader_elements", "array_axis", "bde_position", "reflector_x",
    "g_smc",         "p_max",        "slots",      "gamma0",       "gamma1",      "alpha_db",
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    if (trim(s).empty())
        return parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

std::string field_path(std::string_view key, const Entry& e)
{
    return "scene." + std::string(key) + " (line " + std::to_string(e.line) + ")";
}

double to_number(std::string_view token, const std::string& field)
{
    const std::string tok(token);
    if (tok == "-inf" || tok == "-Inf" || tok == "-INF")
        return -std::numeric_limits<double>::infinity();
    if (tok == "inf" || tok == "+inf" || tok == "Inf")
        return std::numeric_limits<double>::infinity();
    if (tok.empty())
        throw SceneError(field, "expected a number, got an empty token");
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || errno == ERANGE || std::isnan(v))
        throw SceneError(field, "expected a number, got '" + tok + "'");
    return v;
}

std::vector<double> to_list(std::string_view value, const std::string& field)
{
    std::vector<double> out;
    for (auto tok : split(value, ','))
        out.push_back(to_number(tok, field));
    return out;
}

Point3 to_point(std::string_view value, const std::string& field)
{
    const auto v = to_list(value, field);
    if (v.size() != 3)
        throw SceneError(field, "expected three coordinates 'x, y, z'");
    for (double c : v)
        if (!std::isfinite(c))
            throw SceneError(field, "coordinates must be finite");
    return {v[0], v[1], v[2]};
}

int to_count(std::string_view value, const std::string& field)
{
    const double v = to_number(trim(value), field);
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e6)
        throw SceneError(field, "expected a positive integer");
    return static_cast<int>(v);
}

std::string num17(double v)
{
    if (std::isinf(v))
        return v < 0 ? "-inf" : "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join(const std::vector<double>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += num17(v[i]);
    }
    return out;
}

std::string point_text(const Point3& p)
{
    return num17(p.x()) + ", " + num17(p.y()) + ", " + num17(p.z());
}

}  // namespace

double parse_db(std::string_view token)
{
    const double v = to_number(trim(token), "alpha_db");
    if (v == std::numeric_limits<double>::infinity())
        throw SceneError("alpha_db", "+inf is not a valid design target");
    return v;
}

SceneConfig parse_scene_text(std::string_view text)
{
    std::map<std::string, Entry, std::less<>> entries;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw SceneError("scene (line " + std::to_string(line_no) + ")", "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        if (!kKeys.contains(key))
            throw SceneError("scene." + key + " (line " + std::to_string(line_no) + ")", "unknown key");
        if (entries.contains(key))
            throw SceneError("scene." + key + " (line " + std::to_string(line_no) + ")", "duplicate key");
        entries.emplace(key, Entry{std::string(trim(line.substr(eq + 1))), line_no});
    }

    auto find = [&](std::string_view key) -> std::optional<std::pair<std::string, std::string>> {
        const auto it = entries.find(key);
        if (it == entries.end())
            return std::nullopt;
        return std::pair{it->second.value, field_path(key, it->second)};
    };

    SceneConfig scene = SceneConfig::reference();

    if (auto e = find("wavelength")) {
        scene.wavelength = to_number(trim(e->first), e->second);
        if (!(scene.wavelength > 0.0) || !std::isfinite(scene.wavelength))
            throw SceneError(e->second, "must be > 0");
    }

    Point3 axis(1.0, 0.0, 0.0);
    if (auto e = find("array_axis")) {
        axis = to_point(e->first, e->second);
        if (!(axis.norm() > 0.0))
            throw SceneError(e->second, "axis must be non-zero");
    }

    auto build_array = [&](const std::string& prefix, const Point3& default_center) {
        const auto explicit_elements = find(prefix + "_elements");
        const auto count = find(prefix + "_count");
        const auto center = find(prefix + "_center");
        const auto spacing = find(prefix + "_spacing");
        if (explicit_elements) {
            if (count || center || spacing)
                throw SceneError(explicit_elements->second,
                                 "cannot be combined with " + prefix + "_count/_center/_spacing");
            std::vector<Point3> pts;
            for (auto item : split(explicit_elements->first, ';'))
                pts.push_back(to_point(item, explicit_elements->second));
            try {
                return ArrayGeometry(std::move(pts));
            } catch (const std::invalid_argument& ex) {
                throw SceneError(explicit_elements->second, ex.what());
            }
        }
        const int n = count ? to_count(count->first, count->second) : 16;
        const Point3 c = center ? to_point(center->first, center->second) : default_center;
        double pitch = 0.5 * scene.wavelength;
        if (spacing) {
            pitch = to_number(trim(spacing->first), spacing->second);
            if (!(pitch > 0.0) || !std::isfinite(pitch))
                throw SceneError(spacing->second, "must be > 0");
        }
        return build_ula(c, n, pitch, axis);
    };
    scene.ce_array = build_array("ce", Point3(0.0, 0.0, 0.0));
    scene.reader_array = build_array("reader", Point3(0.0, 8.0, 0.0));

    if (auto e = find("bde_position"))
        scene.bde_position = to_point(e->first, e->second);

    if (auto e = find("reflector_x")) {
        scene.reflector_x = to_list(e->first, e->second);
        for (double v : scene.reflector_x)
            if (!std::isfinite(v))
                throw SceneError(e->second, "plane offsets must be finite");
    }

    if (auto e = find("g_smc")) {
        scene.g_smc = to_number(trim(e->first), e->second);
        if (!(scene.g_smc >= 0.0 && scene.g_smc <= 1.0))
            throw SceneError(e->second, "must lie in [0, 1]");
    }

    if (auto e = find("p_max")) {
        scene.p_max = to_number(trim(e->first), e->second);
        if (!(scene.p_max > 0.0) || !std::isfinite(scene.p_max))
            throw SceneError(e->second, "must be > 0");
    }

    std::optional<std::size_t> slots;
    if (auto e = find("slots"))
        slots = static_cast<std::size_t>(to_count(e->first, e->second));
    const auto g0 = find("gamma0");
    const auto g1 = find("gamma1");
    if (g0 || g1) {
        if (!(g0 && g1))
            throw SceneError(g0 ? g0->second : g1->second, "gamma0 and gamma1 must be given together");
        scene.gammas.gamma0 = to_list(g0->first, g0->second);
        scene.gammas.gamma1 = to_list(g1->first, g1->second);
        if (slots && scene.gammas.gamma0.size() != *slots)
            throw SceneError(g0->second, "length must equal slots");
        if (slots && scene.gammas.gamma1.size() != *slots)
            throw SceneError(g1->second, "length must equal slots");
        try {
            scene.gammas.validate();
        } catch (const std::invalid_argument& ex) {
            throw SceneError(g1->second, ex.what());
        }
    } else if (slots) {
        scene.gammas = GammaScheme::antipodal(*slots);
    }

    if (auto e = find("alpha_db")) {
        scene.alphas_db.clear();
        for (auto tok : split(e->first, ',')) {
            const double v = to_number(tok, e->second);
            if (v == std::numeric_limits<double>::infinity())
                throw SceneError(e->second, "+inf is not a valid design target");
            scene.alphas_db.push_back(v);
        }
    }

    try {
        scene.validate();
    } catch (const std::invalid_argument& ex) {
        throw SceneError("scene", ex.what());
    }
    return scene;
}

SceneConfig parse_scene(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw SceneError("scene", "cannot open '" + file.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene_text(buf.str());
}

std::string format_scene(const SceneConfig& scene)
{
    auto elements = [](const ArrayGeometry& a) {
        std::string out;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i)
                out += "; ";
            out += point_text(a[i]);
        }
        return out;
    };
    std::ostringstream os;
    os << "wavelength = " << num17(scene.wavelength) << '\n'
       << "ce_elements = " << elements(scene.ce_array) << '\n'
       << "reader_elements = " << elements(scene.reader_array) << '\n'
       << "bde_position = " << point_text(scene.bde_position) << '\n'
       << "reflector_x = " << join(scene.reflector_x) << '\n'
       << "g_smc = " << num17(scene.g_smc) << '\n'
       << "p_max = " << num17(scene.p_max) << '\n'
       << "slots = " << scene.gammas.slots() << '\n'
       << "gamma0 = " << join(scene.gammas.gamma0) << '\n'
       << "gamma1 = " << join(scene.gammas.gamma1) << '\n'
       << "alpha_db = " << join(scene.alphas_db) << '\n';
    return os.str();
}

}  // namespace bibeam
