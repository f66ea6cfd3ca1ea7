#include <charconv>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "hfk/scenario.hpp"

namespace hfk {

namespace {

// Locale-independent shortest-width decimal with 17 significant digits.
void append17(std::string& out, double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v,
                             std::chars_format::general, 17);
    out.append(buf, res.ptr);
}

} // namespace

std::string result_to_csv(const ScenarioResult& r, bool log_density) {
    std::string out;
    const bool two_d = r.config.dimension == 2;
    out.reserve(r.psi_sq.size() * 60 + 64);
    out += two_d ? "x,y,psi_sq,err_est" : "x,psi_sq,err_est";
    if (log_density) out += ",log_psi_sq";
    out += '\n';

    const size_t ny = two_d ? r.ys.size() : 1;
    for (size_t i = 0; i < r.psi_sq.size(); ++i) {
        append17(out, r.xs[i / ny]);
        if (two_d) {
            out += ',';
            append17(out, r.ys[i % ny]);
        }
        out += ',';
        append17(out, r.psi_sq[i]);
        out += ',';
        append17(out, r.err[i]);
        if (log_density) {
            out += ',';
            append17(out, std::log(std::max(r.psi_sq[i], 1e-300)));
        }
        out += '\n';
    }
    return out;
}

void write_scenario_outputs(const ScenarioResult& r, const std::string& out_dir,
                            bool log_density, std::string* csv_path,
                            std::string* manifest_path) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir + ": " +
                          ec.message());

    const std::string base =
        r.config.output.empty() ? r.config.name : r.config.output;
    const fs::path csv = fs::path(out_dir) / (base + ".csv");
    const fs::path manifest = fs::path(out_dir) / (base + "_manifest.json");

    {
        std::ofstream f(csv, std::ios::binary);
        if (!f) throw IoError("cannot write " + csv.string());
        f << result_to_csv(r, log_density);
        if (!f) throw IoError("short write to " + csv.string());
    }

    nlohmann::json m;
    m["config"] = nlohmann::json::parse(scenario_to_json_string(r.config));
    m["csv"] = csv.filename().string();
    m["points"] = r.psi_sq.size();
    m["failed_points"] = r.failed_points;
    m["sigma_over_L"] = r.sigma_over_L;
    m["version"] = version;
    m["wall_seconds"] = r.wall_seconds;
    m["warnings"] = r.warnings;
    m["created_unix"] = static_cast<long>(std::time(nullptr));

    {
        std::ofstream f(manifest, std::ios::binary);
        if (!f) throw IoError("cannot write " + manifest.string());
        f << m.dump(2) << '\n';
        if (!f) throw IoError("short write to " + manifest.string());
    }

    if (csv_path) *csv_path = csv.string();
    if (manifest_path) *manifest_path = manifest.string();
}

} // namespace hfk
