#pragma once

#include "satlink/analytics.hpp"
#include "satlink/pass_model.hpp"
#include "satlink/sim_engine.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace satlink {

/// Declarative description of one experiment, loaded from a JSON file. Every physical
/// default can be overridden and is echoed back into outputs.
///
///     {
///       "satellite": {"orbit_altitude_m": 500000, "inclination_deg": 97.4, "memory_slots": 100, ...},
///       "stations":  [{"name": "Nice", "latitude_deg": 43.7, "longitude_deg": 7.27}, ...],
///       "optics":    {"wavelength_m": 1.55e-6, "zenith_transmission": 0.9},
///       "link":      {"emission_period_s": 1e-6, "acceptance_window_s": 1.5e-9, "p_bsm": 0.5},
///       "pass":      {"epoch": "2023-01-02T10:00:00Z", "duration_s": 600, "step_s": 1},
///       "legs":      ["Nice", "Paris"],
///       "profiles":  {"Nice": "nice.csv"},
///       "simulation": {"policy": "static", "static_split": "auto", "seed": 1, "seeds": 10,
///                      "bin_width_s": 1, "drift": "on", "pair_cutoff_s": 1},
///       "output_dir": "out"
///     }
///
/// Unknown keys are rejected at every level.
struct ExperimentSpec {
    SatelliteConfig satellite;
    std::vector<GroundStation> stations;
    std::map<std::string, nlohmann::json> station_link_overrides;
    OpticalParams optics;
    LinkParams link;
    std::optional<int> m_ground;
    std::string epoch = "2023-01-02T10:00:00Z";
    double duration_s = 600.0;
    double step_s = 1.0;
    std::vector<std::string> legs;
    std::map<std::string, std::string> profile_files;
    std::string policy; ///< "single", "static" or "dynamic"
    std::optional<IntSplit> static_split; ///< unset means "auto" (best static split)
    std::uint64_t seed = 1;
    int seeds = 1;
    double bin_width_s = 1.0;
    DriftModel drift = DriftModel::on;
    std::optional<double> pair_cutoff_s = kDefaultPairCutoff; ///< null in JSON: unbounded buffer
    std::string output_dir = "out";
    std::string base_dir = "."; ///< relative profile paths resolve against this

    const GroundStation& station(const std::string& name) const;
    LinkParams leg_params(const std::string& name) const;
    /// Loads the CSV configured for `name`, or propagates the pass.
    PassProfile profile(const std::string& name) const;
    std::vector<PassProfile> leg_profiles() const;
    /// Simulation config for one seed. A two-leg static policy without an explicit split
    /// uses best_static_split.
    SimConfig sim_config(std::uint64_t rng_seed) const;
    void validate() const;
    nlohmann::json to_json() const;
};

/// Throws ConfigError with the offending key path on schema violations.
ExperimentSpec parse_experiment(const nlohmann::json& doc, const std::string& base_dir = ".");
ExperimentSpec load_experiment(const std::string& path);

} // namespace satlink
