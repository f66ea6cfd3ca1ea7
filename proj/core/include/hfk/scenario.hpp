#pragma once
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfk/aperture.hpp"
#include "hfk/packets.hpp"
#include "hfk/quadrature.hpp"
#include "hfk/types.hpp"

namespace hfk {

// Configuration and grid-evaluation layer. Configs are plain JSON with a
// strict schema: unknown keys are rejected with a path to the offender.

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    int n = 1;
    std::vector<double> points() const; // n == 1 collapses to {min}
};

struct ScenarioConfig {
    std::string name = "custom";
    PhysicalConstants constants;
    int dimension = 1;
    GaussianPacket1D packet1; // used when dimension == 1
    GaussianPacket2D packet2; // used when dimension == 2
    double d = 0.0;           // screen position on the propagation axis
    double alpha = 0.0;       // screen curvature (2D only)
    std::string aperture_name = "open";
    std::map<std::string, double> aperture_params;
    double t = 0.0;
    GridAxis x;
    GridAxis y;             // 2D only
    QuadratureSpec quad;
    double y_window = 0.0;  // 2D curve-parameter truncation; 0 = automatic
    std::string output;     // output base name; empty = scenario name

    Aperture make_aperture() const;
    double sigma_over_L() const; // packet width over source-screen distance
    void validate() const;       // throws ConfigError
};

ScenarioConfig scenario_from_json_string(const std::string& text);
std::string scenario_to_json_string(const ScenarioConfig& cfg, int indent = 2);

// Reads a config file. A file whose top-level object has a "config" key is
// treated as an emitted manifest and the embedded config is used, so a run
// can be reproduced directly from its manifest.
ScenarioConfig load_scenario_file(const std::string& path);

const std::vector<ScenarioConfig>& builtin_scenarios();
const ScenarioConfig* find_builtin(const std::string& name);

// Grid of |Psi|^2 values in row-major order (x outer, y inner).
//
// err holds the propagated quadrature error estimate for successful points
// and a negative code for failed ones: -1 tolerance not met, -2 invalid
// geometry, -3 internal evaluation error. psi_sq always holds the
// non-negative best estimate (0 when none exists).
struct ScenarioResult {
    ScenarioConfig config;
    std::vector<double> xs;
    std::vector<double> ys; // empty in 1D
    std::vector<double> psi_sq;
    std::vector<double> err;
    long failed_points = 0;
    double sigma_over_L = 0.0;
    double wall_seconds = 0.0;
    std::vector<std::string> warnings;
};

// Pure parallel map over grid points; identical inputs give bit-identical
// results for any worker count.
ScenarioResult run_scenario(const ScenarioConfig& cfg, int workers = 1);

// CSV with header x[,y],psi_sq,err_est; log_density appends log_psi_sq with
// the density floored at 1e-300. Values carry 17 significant digits.
std::string result_to_csv(const ScenarioResult& r, bool log_density = false);

// Writes <base>.csv and <base>_manifest.json into out_dir; reports the paths
// through the optional out-parameters. Throws IoError on filesystem trouble.
void write_scenario_outputs(const ScenarioResult& r, const std::string& out_dir,
                            bool log_density = false,
                            std::string* csv_path = nullptr,
                            std::string* manifest_path = nullptr);

} // namespace hfk
