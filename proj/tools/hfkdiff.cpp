// Command-line front end: run diffraction scenarios to CSV, inspect the
// built-in catalog, validate configs, and execute the physics cross-checks.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfk/scenario.hpp"
#include "hfk/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitPartial = 2;
constexpr int kExitIo = 3;

void print_run_summary(const hfk::ScenarioResult& res, const std::string& csv,
                       const std::string& manifest) {
    std::printf("scenario   %s\n", res.config.name.c_str());
    std::printf("points     %zu", res.psi_sq.size());
    if (res.failed_points > 0)
        std::printf("  (%ld failed)", res.failed_points);
    std::printf("\n");
    std::printf("sigma/L    %.6g\n", res.sigma_over_L);
    std::printf("wall time  %.2f s\n", res.wall_seconds);
    for (const auto& w : res.warnings)
        std::printf("warning    %s\n", w.c_str());
    std::printf("csv        %s\n", csv.c_str());
    std::printf("manifest   %s\n", manifest.c_str());
}

int run_config(const hfk::ScenarioConfig& cfg, const std::string& out_dir,
               int workers, bool log_density) {
    hfk::ScenarioResult res = hfk::run_scenario(cfg, workers);
    std::string csv, manifest;
    hfk::write_scenario_outputs(res, out_dir, log_density, &csv, &manifest);
    print_run_summary(res, csv, manifest);
    return res.failed_points > 0 ? kExitPartial : kExitOk;
}

int cmd_list() {
    for (const auto& cfg : hfk::builtin_scenarios()) {
        std::string grid = std::to_string(cfg.x.n);
        if (cfg.dimension == 2)
            grid += "x" + std::to_string(cfg.y.n);
        std::string ap = cfg.aperture_name;
        if (!cfg.aperture_params.empty()) {
            ap += "(";
            bool first = true;
            for (const auto& [k, v] : cfg.aperture_params) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%s%s=%g", first ? "" : ", ",
                              k.c_str(), v);
                ap += buf;
                first = false;
            }
            ap += ")";
        }
        std::printf("%-18s %dD  t=%g  d=%g", cfg.name.c_str(), cfg.dimension,
                    cfg.t, cfg.d);
        if (cfg.dimension == 2)
            std::printf("  alpha=%g", cfg.alpha);
        std::printf("  grid=%s  aperture=%s\n", grid.c_str(), ap.c_str());
    }
    return kExitOk;
}

int cmd_validate(const std::string& path) {
    hfk::ScenarioConfig cfg = hfk::load_scenario_file(path);
    std::printf("%s: valid (%s, %dD, %zu grid points)\n", path.c_str(),
                cfg.name.c_str(), cfg.dimension,
                cfg.x.points().size() *
                    (cfg.dimension == 2 ? cfg.y.points().size() : 1));
    return kExitOk;
}

int cmd_validate_physics(bool as_json) {
    auto reports = hfk::run_full_validation();
    bool all_pass = std::all_of(reports.begin(), reports.end(),
                                [](const auto& r) { return r.pass; });
    if (as_json) {
        std::string out = "{\n  \"suites\": [\n";
        for (size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "    {\"name\": \"%s\", \"samples\": %d, "
                          "\"max_rel_dev\": %.17g, \"threshold\": %.17g, "
                          "\"pass\": %s}%s\n",
                          r.name.c_str(), r.samples, r.max_rel_dev, r.threshold,
                          r.pass ? "true" : "false",
                          i + 1 < reports.size() ? "," : "");
            out += buf;
        }
        out += "  ],\n  \"pass\": ";
        out += all_pass ? "true" : "false";
        out += "\n}\n";
        std::fputs(out.c_str(), stdout);
    } else {
        for (const auto& r : reports)
            std::printf("%-30s samples=%3d max_rel_dev=%.3e threshold=%.0e  %s\n",
                        r.name.c_str(), r.samples, r.max_rel_dev, r.threshold,
                        r.pass ? "pass" : "FAIL");
        std::printf("%s\n", all_pass ? "all suites passed" : "FAILURES present");
    }
    return all_pass ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matter-wave diffraction in space and time"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", builtin_name;
    int workers = 1;
    bool log_density = false, as_json = false;

    auto add_run_flags = [&](CLI::App* c) {
        c->add_option("--out", out_dir, "output directory")
            ->capture_default_str();
        c->add_option("--workers", workers, "worker thread count")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        c->add_flag("--log-density", log_density,
                    "append a log_psi_sq column (density floored at 1e-300)");
    };

    CLI::App* run = app.add_subcommand("run", "evaluate a scenario config file");
    run->add_option("config", config_path, "scenario config (or manifest) JSON")
        ->required();
    add_run_flags(run);

    CLI::App* scen =
        app.add_subcommand("scenario", "evaluate a built-in scenario by name");
    scen->add_option("name", builtin_name, "built-in scenario name")->required();
    add_run_flags(scen);

    app.add_subcommand("list", "list the built-in scenario catalog");

    CLI::App* val = app.add_subcommand("validate", "check a config file");
    val->add_option("config", config_path, "scenario config (or manifest) JSON")
        ->required();

    CLI::App* vphys = app.add_subcommand(
        "validate-physics", "run the physics identity and oracle suites");
    vphys->add_flag("--json", as_json, "machine-readable report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_config(hfk::load_scenario_file(config_path), out_dir,
                              workers, log_density);
        if (scen->parsed()) {
            const hfk::ScenarioConfig* cfg = hfk::find_builtin(builtin_name);
            if (!cfg) {
                std::fprintf(stderr,
                             "unknown scenario \"%s\"; `hfkdiff list` shows "
                             "the catalog\n",
                             builtin_name.c_str());
                return kExitConfig;
            }
            return run_config(*cfg, out_dir, workers, log_density);
        }
        if (app.get_subcommand("list")->parsed())
            return cmd_list();
        if (val->parsed())
            return cmd_validate(config_path);
        if (vphys->parsed())
            return cmd_validate_physics(as_json);
    } catch (const hfk::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const hfk::IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
    return kExitOk;
}
