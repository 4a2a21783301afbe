#include "satlink/experiment.hpp"

#include "satlink/errors.hpp"
#include "satlink/profile_csv.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

namespace satlink {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
        throw ConfigError(path + ": expected an object");
    }
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!keys.count(it.key())) {
            throw ConfigError(path + ": unknown key '" + it.key() + "'");
        }
    }
}

template <typename T>
void read_opt(const json& obj, const std::string& path, const char* key, T& out) {
    if (!obj.contains(key) || obj.at(key).is_null()) {
        return;
    }
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(path + "." + key + ": wrong type");
    }
}

void apply_link(const json& obj, const std::string& path, LinkParams& link, std::optional<int>& m_ground) {
    reject_unknown(obj, path,
                   {"emission_period_s", "acceptance_window_s", "p_bsm", "m_ground", "processing_delay_s",
                    "light_speed_mps"});
    read_opt(obj, path, "emission_period_s", link.emission_period);
    read_opt(obj, path, "acceptance_window_s", link.acceptance_window);
    read_opt(obj, path, "p_bsm", link.p_bsm);
    read_opt(obj, path, "processing_delay_s", link.processing_delay);
    read_opt(obj, path, "light_speed_mps", link.light_speed);
    if (obj.contains("m_ground") && !obj.at("m_ground").is_null()) {
        int g = 0;
        read_opt(obj, path, "m_ground", g);
        m_ground = g;
    }
}

DriftModel parse_drift(const json& v, const std::string& path) {
    if (v.is_boolean()) {
        return v.get<bool>() ? DriftModel::on : DriftModel::off;
    }
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "on") {
            return DriftModel::on;
        }
        if (s == "off") {
            return DriftModel::off;
        }
    }
    throw ConfigError(path + ": drift must be \"on\" or \"off\"");
}

} // namespace

const GroundStation& ExperimentSpec::station(const std::string& name) const {
    auto it = std::find_if(stations.begin(), stations.end(),
                           [&](const GroundStation& g) { return g.name == name; });
    if (it == stations.end()) {
        throw ConfigError("unknown station '" + name + "'");
    }
    return *it;
}

LinkParams ExperimentSpec::leg_params(const std::string& name) const {
    LinkParams p = link;
    std::optional<int> ground = m_ground;
    if (auto it = station_link_overrides.find(name); it != station_link_overrides.end()) {
        apply_link(it->second, "stations." + name + ".link", p, ground);
    }
    p.m_sat = satellite.memory_slots;
    p.m_ground = ground.value_or(satellite.memory_slots);
    return p;
}

PassProfile ExperimentSpec::profile(const std::string& name) const {
    if (auto it = profile_files.find(name); it != profile_files.end()) {
        std::filesystem::path path(it->second);
        if (path.is_relative()) {
            path = std::filesystem::path(base_dir) / path;
        }
        PassProfile p = read_profile(path.string());
        if (p.station != name) {
            throw ConfigError("profile file " + path.string() + " describes station '" + p.station +
                              "', expected '" + name + "'");
        }
        return p;
    }
    return propagate_pass(satellite, station(name), optics, epoch, duration_s, step_s);
}

std::vector<PassProfile> ExperimentSpec::leg_profiles() const {
    std::vector<PassProfile> out;
    for (const std::string& name : legs) {
        out.push_back(profile(name));
    }
    return out;
}

SimConfig ExperimentSpec::sim_config(std::uint64_t rng_seed) const {
    SimConfig c;
    c.profiles = leg_profiles();
    for (const std::string& name : legs) {
        c.legs.push_back(leg_params(name));
    }
    c.rng_seed = rng_seed;
    c.bin_width = bin_width_s;
    c.drift = drift;
    c.pair_cutoff_s = pair_cutoff_s;
    c.record_rounds = false;
    if (policy == "single") {
        c.policy.kind = PolicyKind::single;
    } else if (policy == "dynamic") {
        c.policy.kind = PolicyKind::dynamic_int;
    } else {
        c.policy.kind = PolicyKind::fixed;
        if (c.profiles.size() == 2) {
            c.policy.split = static_split ? *static_split
                                          : best_static_split(c.profiles[0], c.profiles[1],
                                                              satellite.memory_slots, c.legs[0], c.legs[1]);
        }
    }
    c.validate();
    return c;
}

void ExperimentSpec::validate() const {
    satellite.validate();
    optics.validate();
    if (stations.empty()) {
        throw ConfigError("stations: at least one station required");
    }
    std::set<std::string> names;
    for (const GroundStation& g : stations) {
        g.validate();
        if (!names.insert(g.name).second) {
            throw ConfigError("stations: duplicate name '" + g.name + "'");
        }
    }
    if (legs.empty() || legs.size() > 2) {
        throw ConfigError("legs: one or two station names required");
    }
    if (legs.size() == 2 && legs[0] == legs[1]) {
        throw ConfigError("legs: the two legs must name different stations");
    }
    for (const std::string& name : legs) {
        station(name);
        leg_params(name).validate();
    }
    for (const auto& [name, path] : profile_files) {
        if (!names.count(name)) {
            throw ConfigError("profiles: unknown station '" + name + "'");
        }
    }
    if (!(step_s > 0.0)) {
        throw ConfigError("pass.step_s must be > 0");
    }
    if (!(duration_s > 0.0) || duration_s / step_s < 2.0) {
        throw ConfigError("pass.duration_s must cover at least two steps");
    }
    if (policy != "single" && policy != "static" && policy != "dynamic") {
        throw ConfigError("simulation.policy must be single, static or dynamic");
    }
    if (legs.size() == 1 && policy != "single") {
        throw ConfigError("simulation.policy: a single leg requires policy 'single'");
    }
    if (legs.size() == 2 && policy == "single") {
        throw ConfigError("simulation.policy: two legs require policy 'static' or 'dynamic'");
    }
    if (static_split && static_split->m_a + static_split->m_b != satellite.memory_slots) {
        throw ConfigError("simulation.static_split must sum to satellite.memory_slots");
    }
    if (seeds < 1) {
        throw ConfigError("simulation.seeds must be >= 1");
    }
    if (!(bin_width_s > 0.0)) {
        throw ConfigError("simulation.bin_width_s must be > 0");
    }
    if (pair_cutoff_s && !(*pair_cutoff_s > 0.0)) {
        throw ConfigError("simulation.pair_cutoff_s must be > 0");
    }
}

json ExperimentSpec::to_json() const {
    json j;
    j["satellite"] = {{"orbit_altitude_m", satellite.orbit_altitude_m},
                      {"inclination_deg", satellite.orbit_inclination_deg},
                      {"raan_deg", satellite.raan_deg},
                      {"phase_at_epoch_deg", satellite.phase_at_epoch_deg},
                      {"tx_telescope_diameter_m", satellite.tx_telescope_diameter_m},
                      {"memory_slots", satellite.memory_slots}};
    j["stations"] = json::array();
    for (const GroundStation& g : stations) {
        json s = {{"name", g.name},
                  {"latitude_deg", g.latitude_deg},
                  {"longitude_deg", g.longitude_deg},
                  {"altitude_m", g.altitude_m},
                  {"rx_telescope_diameter_m", g.rx_telescope_diameter_m},
                  {"min_elevation_deg", g.min_elevation_deg}};
        if (auto it = station_link_overrides.find(g.name); it != station_link_overrides.end()) {
            s["link"] = it->second;
        }
        j["stations"].push_back(s);
    }
    j["optics"] = {{"wavelength_m", optics.wavelength_m},
                   {"zenith_transmission", optics.zenith_atmospheric_transmission},
                   {"system_efficiency", optics.system_efficiency}};
    j["link"] = {{"emission_period_s", link.emission_period},
                 {"acceptance_window_s", link.acceptance_window},
                 {"p_bsm", link.p_bsm},
                 {"m_ground", m_ground ? json(*m_ground) : json(nullptr)},
                 {"processing_delay_s", link.processing_delay},
                 {"light_speed_mps", link.light_speed}};
    j["pass"] = {{"epoch", epoch}, {"duration_s", duration_s}, {"step_s", step_s}};
    j["legs"] = legs;
    j["profiles"] = profile_files;
    j["simulation"] = {{"policy", policy},
                       {"static_split", static_split ? json{static_split->m_a, static_split->m_b} : json("auto")},
                       {"seed", seed},
                       {"seeds", seeds},
                       {"bin_width_s", bin_width_s},
                       {"drift", drift == DriftModel::on ? "on" : "off"},
                       {"pair_cutoff_s", pair_cutoff_s ? json(*pair_cutoff_s) : json(nullptr)}};
    j["output_dir"] = output_dir;
    return j;
}

ExperimentSpec parse_experiment(const json& doc, const std::string& base_dir) {
    reject_unknown(doc, "spec",
                   {"satellite", "stations", "optics", "link", "pass", "legs", "profiles", "simulation",
                    "output_dir"});
    ExperimentSpec spec;
    spec.base_dir = base_dir;

    if (doc.contains("satellite")) {
        const json& s = doc.at("satellite");
        reject_unknown(s, "satellite",
                       {"orbit_altitude_m", "inclination_deg", "raan_deg", "phase_at_epoch_deg",
                        "tx_telescope_diameter_m", "memory_slots"});
        read_opt(s, "satellite", "orbit_altitude_m", spec.satellite.orbit_altitude_m);
        read_opt(s, "satellite", "inclination_deg", spec.satellite.orbit_inclination_deg);
        read_opt(s, "satellite", "raan_deg", spec.satellite.raan_deg);
        read_opt(s, "satellite", "phase_at_epoch_deg", spec.satellite.phase_at_epoch_deg);
        read_opt(s, "satellite", "tx_telescope_diameter_m", spec.satellite.tx_telescope_diameter_m);
        read_opt(s, "satellite", "memory_slots", spec.satellite.memory_slots);
    }

    if (!doc.contains("stations") || !doc.at("stations").is_array()) {
        throw ConfigError("stations: required array");
    }
    for (std::size_t i = 0; i < doc.at("stations").size(); ++i) {
        const json& s = doc.at("stations")[i];
        const std::string path = "stations[" + std::to_string(i) + "]";
        reject_unknown(s, path,
                       {"name", "latitude_deg", "longitude_deg", "altitude_m", "rx_telescope_diameter_m",
                        "min_elevation_deg", "link"});
        GroundStation g;
        read_opt(s, path, "name", g.name);
        read_opt(s, path, "latitude_deg", g.latitude_deg);
        read_opt(s, path, "longitude_deg", g.longitude_deg);
        read_opt(s, path, "altitude_m", g.altitude_m);
        read_opt(s, path, "rx_telescope_diameter_m", g.rx_telescope_diameter_m);
        read_opt(s, path, "min_elevation_deg", g.min_elevation_deg);
        if (s.contains("link")) {
            LinkParams probe;
            std::optional<int> ground;
            apply_link(s.at("link"), path + ".link", probe, ground);
            spec.station_link_overrides[g.name] = s.at("link");
        }
        spec.stations.push_back(g);
    }

    if (doc.contains("optics")) {
        const json& o = doc.at("optics");
        reject_unknown(o, "optics", {"wavelength_m", "zenith_transmission", "system_efficiency"});
        read_opt(o, "optics", "wavelength_m", spec.optics.wavelength_m);
        read_opt(o, "optics", "zenith_transmission", spec.optics.zenith_atmospheric_transmission);
        read_opt(o, "optics", "system_efficiency", spec.optics.system_efficiency);
    }
    if (doc.contains("link")) {
        apply_link(doc.at("link"), "link", spec.link, spec.m_ground);
    }
    if (doc.contains("pass")) {
        const json& p = doc.at("pass");
        reject_unknown(p, "pass", {"epoch", "duration_s", "step_s"});
        read_opt(p, "pass", "epoch", spec.epoch);
        read_opt(p, "pass", "duration_s", spec.duration_s);
        read_opt(p, "pass", "step_s", spec.step_s);
    }
    if (doc.contains("legs")) {
        read_opt(doc, "spec", "legs", spec.legs);
    } else {
        for (std::size_t i = 0; i < std::min<std::size_t>(2, spec.stations.size()); ++i) {
            spec.legs.push_back(spec.stations[i].name);
        }
    }
    if (doc.contains("profiles")) {
        read_opt(doc, "spec", "profiles", spec.profile_files);
    }
    spec.policy = spec.legs.size() == 2 ? "static" : "single";
    if (doc.contains("simulation")) {
        const json& s = doc.at("simulation");
        reject_unknown(s, "simulation",
                       {"policy", "static_split", "seed", "seeds", "bin_width_s", "drift", "pair_cutoff_s"});
        read_opt(s, "simulation", "policy", spec.policy);
        if (s.contains("static_split") && !s.at("static_split").is_null()) {
            const json& v = s.at("static_split");
            if (v.is_string() && v.get<std::string>() == "auto") {
                spec.static_split.reset();
            } else if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
                spec.static_split = IntSplit{v[0].get<int>(), v[1].get<int>()};
            } else {
                throw ConfigError("simulation.static_split must be \"auto\" or [m_A, m_B]");
            }
        }
        read_opt(s, "simulation", "seed", spec.seed);
        read_opt(s, "simulation", "seeds", spec.seeds);
        read_opt(s, "simulation", "bin_width_s", spec.bin_width_s);
        if (s.contains("drift")) {
            spec.drift = parse_drift(s.at("drift"), "simulation.drift");
        }
        if (s.contains("pair_cutoff_s") && s.at("pair_cutoff_s").is_null()) {
            spec.pair_cutoff_s.reset();
        } else if (s.contains("pair_cutoff_s")) {
            double cutoff = 0.0;
            read_opt(s, "simulation", "pair_cutoff_s", cutoff);
            spec.pair_cutoff_s = cutoff;
        }
    }
    read_opt(doc, "spec", "output_dir", spec.output_dir);
    spec.validate();
    return spec;
}

ExperimentSpec load_experiment(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open spec file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    const auto parent = std::filesystem::path(path).parent_path();
    try {
        return parse_experiment(doc, parent.empty() ? "." : parent.string());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

} // namespace satlink
