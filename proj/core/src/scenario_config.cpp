#include "hfk/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace hfk {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](const char* k) { return it.key() == k; });
        if (!known) fail(path, "unknown key \"" + it.key() + "\"");
    }
}

const json& need(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
    return *it;
}

double as_num(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
}

double need_num(const json& obj, const std::string& path, const char* key) {
    return as_num(need(obj, path, key), path + "." + key);
}

int need_int(const json& obj, const std::string& path, const char* key) {
    const json& v = need(obj, path, key);
    if (!v.is_number_integer())
        fail(path + "." + key, "expected an integer");
    return v.get<int>();
}

std::array<double, 2> need_pair(const json& obj, const std::string& path,
                                const char* key) {
    const json& v = need(obj, path, key);
    if (!v.is_array() || v.size() != 2)
        fail(path + "." + key, "expected an array of 2 numbers");
    return {as_num(v[0], path + "." + key), as_num(v[1], path + "." + key)};
}

GridAxis parse_axis(const json& obj, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    reject_unknown(obj, path, {"min", "max", "n"});
    GridAxis ax;
    ax.min = need_num(obj, path, "min");
    ax.max = need_num(obj, path, "max");
    ax.n = need_int(obj, path, "n");
    return ax;
}

ScenarioConfig parse_config_object(const json& o, const std::string& path) {
    if (!o.is_object()) fail(path, "expected an object");
    reject_unknown(o, path,
                   {"name", "constants", "dimension", "packet", "screen",
                    "aperture", "t", "grid", "quadrature", "y_window", "output"});

    ScenarioConfig c;
    c.dimension = need_int(o, path, "dimension");
    if (c.dimension != 1 && c.dimension != 2)
        fail(path + ".dimension", "must be 1 or 2");

    if (auto it = o.find("name"); it != o.end()) {
        if (!it->is_string()) fail(path + ".name", "expected a string");
        c.name = it->get<std::string>();
    }
    if (auto it = o.find("output"); it != o.end()) {
        if (!it->is_string()) fail(path + ".output", "expected a string");
        c.output = it->get<std::string>();
    }

    if (auto it = o.find("constants"); it != o.end()) {
        const std::string p = path + ".constants";
        if (!it->is_object()) fail(p, "expected an object");
        reject_unknown(*it, p, {"mass", "hbar"});
        if (auto f = it->find("mass"); f != it->end())
            c.constants.mass = as_num(*f, p + ".mass");
        if (auto f = it->find("hbar"); f != it->end())
            c.constants.hbar = as_num(*f, p + ".hbar");
    }

    {
        const json& pk = need(o, path, "packet");
        const std::string p = path + ".packet";
        if (!pk.is_object()) fail(p, "expected an object");
        reject_unknown(pk, p, {"Q", "P", "sigma"});
        if (c.dimension == 1) {
            c.packet1.Q = need_num(pk, p, "Q");
            c.packet1.P = need_num(pk, p, "P");
            c.packet1.sigma = need_num(pk, p, "sigma");
        } else {
            c.packet2.Q = need_pair(pk, p, "Q");
            c.packet2.P = need_pair(pk, p, "P");
            c.packet2.sigma = need_pair(pk, p, "sigma");
        }
    }

    {
        const json& sc = need(o, path, "screen");
        const std::string p = path + ".screen";
        if (!sc.is_object()) fail(p, "expected an object");
        if (c.dimension == 2) {
            reject_unknown(sc, p, {"d", "alpha"});
            if (auto f = sc.find("alpha"); f != sc.end())
                c.alpha = as_num(*f, p + ".alpha");
        } else {
            reject_unknown(sc, p, {"d"});
        }
        c.d = need_num(sc, p, "d");
    }

    {
        const json& ap = need(o, path, "aperture");
        const std::string p = path + ".aperture";
        if (!ap.is_object()) fail(p, "expected an object");
        const json& nm = need(ap, p, "name");
        if (!nm.is_string()) fail(p + ".name", "expected a string");
        c.aperture_name = nm.get<std::string>();
        for (auto it = ap.begin(); it != ap.end(); ++it) {
            if (it.key() == "name") continue;
            c.aperture_params[it.key()] = as_num(*it, p + "." + it.key());
        }
    }

    c.t = need_num(o, path, "t");

    {
        const json& g = need(o, path, "grid");
        const std::string p = path + ".grid";
        if (!g.is_object()) fail(p, "expected an object");
        if (c.dimension == 2) {
            reject_unknown(g, p, {"x", "y"});
            c.y = parse_axis(need(g, p, "y"), p + ".y");
        } else {
            reject_unknown(g, p, {"x"});
        }
        c.x = parse_axis(need(g, p, "x"), p + ".x");
    }

    if (auto it = o.find("quadrature"); it != o.end()) {
        const std::string p = path + ".quadrature";
        if (!it->is_object()) fail(p, "expected an object");
        reject_unknown(*it, p, {"abs_tol", "rel_tol", "max_subdivisions"});
        if (auto f = it->find("abs_tol"); f != it->end())
            c.quad.abs_tol = as_num(*f, p + ".abs_tol");
        if (auto f = it->find("rel_tol"); f != it->end())
            c.quad.rel_tol = as_num(*f, p + ".rel_tol");
        if (auto f = it->find("max_subdivisions"); f != it->end()) {
            if (!(*f).is_number_integer())
                fail(p + ".max_subdivisions", "expected an integer");
            c.quad.max_subdivisions = f->get<int>();
        }
    }

    if (auto it = o.find("y_window"); it != o.end()) {
        if (c.dimension != 2) fail(path + ".y_window", "only valid in 2D");
        c.y_window = as_num(*it, path + ".y_window");
    }

    c.validate();
    return c;
}

json config_json(const ScenarioConfig& c) {
    json o;
    o["name"] = c.name;
    o["dimension"] = c.dimension;
    o["constants"] = {{"mass", c.constants.mass}, {"hbar", c.constants.hbar}};
    if (c.dimension == 1)
        o["packet"] = {{"Q", c.packet1.Q}, {"P", c.packet1.P},
                       {"sigma", c.packet1.sigma}};
    else
        o["packet"] = {{"Q", c.packet2.Q}, {"P", c.packet2.P},
                       {"sigma", c.packet2.sigma}};
    if (c.dimension == 1)
        o["screen"] = {{"d", c.d}};
    else
        o["screen"] = {{"d", c.d}, {"alpha", c.alpha}};
    json ap;
    ap["name"] = c.aperture_name;
    for (const auto& [k, v] : c.aperture_params) ap[k] = v;
    o["aperture"] = ap;
    o["t"] = c.t;
    json gx = {{"min", c.x.min}, {"max", c.x.max}, {"n", c.x.n}};
    if (c.dimension == 1) {
        o["grid"] = {{"x", gx}};
    } else {
        o["grid"] = {{"x", gx},
                     {"y", {{"min", c.y.min}, {"max", c.y.max}, {"n", c.y.n}}}};
        if (c.y_window > 0.0) o["y_window"] = c.y_window;
    }
    o["quadrature"] = {{"abs_tol", c.quad.abs_tol},
                       {"rel_tol", c.quad.rel_tol},
                       {"max_subdivisions", c.quad.max_subdivisions}};
    if (!c.output.empty()) o["output"] = c.output;
    return o;
}

void check_axis(const GridAxis& ax, const char* which) {
    if (ax.n < 1) throw ConfigError(std::string("grid.") + which + ".n must be >= 1");
    if (ax.n > 1 && !(ax.max > ax.min))
        throw ConfigError(std::string("grid.") + which +
                          ": max must exceed min when n > 1");
    if (!std::isfinite(ax.min) || !std::isfinite(ax.max))
        throw ConfigError(std::string("grid.") + which + ": range must be finite");
}

ScenarioConfig make_fig1(std::string name, std::string aperture,
                         std::map<std::string, double> params) {
    ScenarioConfig c;
    c.name = std::move(name);
    c.dimension = 1;
    c.packet1 = {0.0, 200.0, 0.1};
    c.d = 8.0;
    c.aperture_name = std::move(aperture);
    c.aperture_params = std::move(params);
    c.t = 0.05;
    c.x = {8.9, 11.1, 512};
    return c;
}

ScenarioConfig make_fig2(std::string name, double alpha, std::string aperture,
                         std::map<std::string, double> params) {
    ScenarioConfig c;
    c.name = std::move(name);
    c.dimension = 2;
    c.packet2.Q = {0.0, 0.0};
    c.packet2.P = {200.0, 0.0};
    c.packet2.sigma = {0.1, 0.1};
    c.d = 8.0;
    c.alpha = alpha;
    c.aperture_name = std::move(aperture);
    c.aperture_params = std::move(params);
    c.t = 0.05;
    c.x = {8.9, 11.1, 220};
    c.y = {-1.6, 1.6, 160};
    c.quad.abs_tol = 1e-9;
    c.quad.rel_tol = 1e-7;
    return c;
}

std::vector<ScenarioConfig> make_catalog() {
    std::vector<ScenarioConfig> v;
    v.push_back(make_fig1("fig1_free", "open", {}));
    v.push_back(make_fig1("fig1_open_at_t0", "moshinsky_open", {{"t0", 0.04}}));
    v.push_back(make_fig1("fig1_close_at_t0", "close_at", {{"t0", 0.04}}));
    v.push_back(make_fig1("fig1_window", "window", {{"t0", 0.04}, {"eps", 5e-4}}));
    v.push_back(make_fig2("fig2_concave", -0.3, "window",
                          {{"t0", 0.04}, {"eps", 5e-4}}));
    v.push_back(make_fig2("fig2_flat", 0.0, "window",
                          {{"t0", 0.04}, {"eps", 5e-4}}));
    v.push_back(make_fig2("fig2_convex", 0.3, "window",
                          {{"t0", 0.04}, {"eps", 5e-4}}));
    v.push_back(make_fig2("fig3_slit", 0.0, "slit", {{"delta", 0.05}}));
    v.push_back(make_fig2("fig3_slit_window", 0.0, "slit_window",
                          {{"delta", 0.05}, {"t0", 0.04}, {"eps", 5e-4}}));
    v.push_back(make_fig2("fig3_ellipse", 0.0, "ellipse",
                          {{"delta", 0.05}, {"eps", 5e-4}, {"t0", 0.04}}));
    return v;
}

} // namespace

std::vector<double> GridAxis::points() const {
    std::vector<double> p;
    p.reserve(static_cast<size_t>(std::max(n, 1)));
    if (n <= 1) {
        p.push_back(min);
        return p;
    }
    for (int i = 0; i < n; ++i)
        p.push_back(min + (max - min) * static_cast<double>(i) /
                              static_cast<double>(n - 1));
    return p;
}

Aperture ScenarioConfig::make_aperture() const {
    return chi_library(aperture_name, aperture_params);
}

double ScenarioConfig::sigma_over_L() const {
    double sigma = dimension == 1 ? packet1.sigma
                                  : std::max(packet2.sigma[0], packet2.sigma[1]);
    double L = dimension == 1 ? d - packet1.Q : d - packet2.Q[0];
    if (!(L > 0.0)) return std::numeric_limits<double>::infinity();
    return sigma / L;
}

void ScenarioConfig::validate() const {
    try {
        constants.validate();
        if (dimension == 1)
            packet1.validate();
        else if (dimension == 2)
            packet2.validate();
        else
            throw ConfigError("dimension must be 1 or 2");
        make_aperture(); // parameter names/values checked by the factory
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (!(t > 0.0)) throw ConfigError("t must be > 0");
    check_axis(x, "x");
    if (dimension == 2) check_axis(y, "y");
    if (y_window < 0.0) throw ConfigError("y_window must be >= 0");
    QuadratureSpec q = quad;
    try {
        q.validate(0.0, t);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("quadrature: ") + e.what());
    }
}

ScenarioConfig scenario_from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("JSON parse error: ") + e.what());
    }
    if (j.is_object() && j.contains("config"))
        return parse_config_object(j["config"], "$.config");
    return parse_config_object(j, "$");
}

std::string scenario_to_json_string(const ScenarioConfig& cfg, int indent) {
    return config_json(cfg).dump(indent);
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return scenario_from_json_string(ss.str());
}

const std::vector<ScenarioConfig>& builtin_scenarios() {
    static const std::vector<ScenarioConfig> catalog = make_catalog();
    return catalog;
}

const ScenarioConfig* find_builtin(const std::string& name) {
    for (const auto& c : builtin_scenarios())
        if (c.name == name) return &c;
    return nullptr;
}

} // namespace hfk
