#include "satlink/pass_model.hpp"

#include "satlink/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace satlink {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

struct State {
    Vec3 position;
    Vec3 velocity;
};

State satellite_state(const SatelliteConfig& sat, double t) {
    const double radius = earth::kRadius + sat.orbit_altitude_m;
    const double mean_motion = std::sqrt(earth::kMu / (radius * radius * radius));
    const double u = sat.phase_at_epoch_deg * kDeg + mean_motion * t;
    const double raan = sat.raan_deg * kDeg;
    const double inc = sat.orbit_inclination_deg * kDeg;

    const double cu = std::cos(u), su = std::sin(u);
    const double co = std::cos(raan), so = std::sin(raan);
    const double ci = std::cos(inc), si = std::sin(inc);

    State s;
    s.position = {radius * (co * cu - so * su * ci), radius * (so * cu + co * su * ci),
                  radius * (su * si)};
    const double speed = radius * mean_motion;
    s.velocity = {speed * (-co * su - so * cu * ci), speed * (-so * su + co * cu * ci),
                  speed * (cu * si)};
    return s;
}

// Station position and velocity in the inertial frame; the frames coincide at t = 0.
State station_state(const GroundStation& st, double t) {
    const double r = earth::kRadius + st.altitude_m;
    const double lat = st.latitude_deg * kDeg;
    const double lon = st.longitude_deg * kDeg + earth::kRotationRate * t;
    State s;
    s.position = {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon),
                  r * std::sin(lat)};
    s.velocity = {-earth::kRotationRate * s.position[1], earth::kRotationRate * s.position[0],
                  0.0};
    return s;
}

bool has_space(const std::string& s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; });
}

} // namespace

void GroundStation::validate() const {
    if (name.empty() || has_space(name) || name.find(',') != std::string::npos) {
        throw ConfigError("station name must be non-empty without whitespace or commas: '" + name + "'");
    }
    if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0)) {
        throw ConfigError("station " + name + ": latitude outside [-90, 90]");
    }
    if (!(longitude_deg >= -180.0 && longitude_deg <= 180.0)) {
        throw ConfigError("station " + name + ": longitude outside [-180, 180]");
    }
    if (!(altitude_m >= 0.0)) {
        throw ConfigError("station " + name + ": altitude must be >= 0");
    }
    if (!(rx_telescope_diameter_m > 0.0)) {
        throw ConfigError("station " + name + ": receive telescope diameter must be > 0");
    }
    if (!(min_elevation_deg > 0.0 && min_elevation_deg < 90.0)) {
        throw ConfigError("station " + name + ": min elevation must lie in (0, 90)");
    }
}

void SatelliteConfig::validate() const {
    if (!(orbit_altitude_m > 0.0) || !std::isfinite(orbit_altitude_m)) {
        throw ConfigError("satellite: orbit altitude must be > 0");
    }
    if (!(tx_telescope_diameter_m > 0.0)) {
        throw ConfigError("satellite: transmit telescope diameter must be > 0");
    }
    if (memory_slots < 1) {
        throw ConfigError("satellite: memory slots must be >= 1");
    }
    if (!std::isfinite(orbit_inclination_deg) || !std::isfinite(raan_deg) ||
        !std::isfinite(phase_at_epoch_deg)) {
        throw ConfigError("satellite: orbital angles must be finite");
    }
}

void OpticalParams::validate() const {
    if (!(wavelength_m > 0.0)) {
        throw ConfigError("optics: wavelength must be > 0");
    }
    if (!(zenith_atmospheric_transmission > 0.0 && zenith_atmospheric_transmission <= 1.0)) {
        throw ConfigError("optics: zenith transmission must lie in (0, 1]");
    }
    if (!(system_efficiency > 0.0 && system_efficiency <= 1.0)) {
        throw ConfigError("optics: system efficiency must lie in (0, 1]");
    }
}

void PassProfile::validate() const {
    if (station.empty() || has_space(station)) {
        throw ConfigError("profile: station label must be non-empty without whitespace");
    }
    if (epoch.empty() || has_space(epoch)) {
        throw ConfigError("profile: epoch must be non-empty without whitespace");
    }
    if (!(sample_step > 0.0) || !std::isfinite(sample_step)) {
        throw ConfigError("profile: sample step must be > 0");
    }
    if (samples.size() < 2) {
        throw ConfigError("profile: at least 2 samples required");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const PassSample& s = samples[i];
        const std::string where = "profile " + station + " sample " + std::to_string(i + 1);
        if (!std::isfinite(s.t)) {
            throw ConfigError(where + ": non-finite time");
        }
        if (i > 0) {
            const double dt = s.t - samples[i - 1].t;
            if (!(dt > 0.0)) {
                throw ConfigError(where + ": time not strictly increasing");
            }
            if (std::abs(dt - sample_step) > 1e-6) {
                throw ConfigError(where + ": spacing differs from sample step");
            }
        }
        if (!(s.distance_m > 0.0) || !std::isfinite(s.distance_m)) {
            throw ConfigError(where + ": distance must be > 0");
        }
        if (!(s.elevation_deg >= -90.0 && s.elevation_deg <= 90.0)) {
            throw ConfigError(where + ": elevation outside [-90, 90]");
        }
        if (!std::isfinite(s.radial_velocity_mps)) {
            throw ConfigError(where + ": non-finite radial velocity");
        }
        if (!(s.eta >= 0.0 && s.eta <= 1.0)) {
            throw ConfigError(where + ": eta outside [0, 1]");
        }
        if (!s.visible && s.eta != 0.0) {
            throw ConfigError(where + ": eta must be 0 when not visible");
        }
    }
}

std::size_t PassProfile::index_at(double t) const {
    const double rel = (t - samples.front().t) / sample_step;
    if (!(rel > 0.0)) {
        return 0;
    }
    auto idx = static_cast<std::size_t>(std::floor(rel));
    // Guard against the division landing a hair below an exact sample time.
    if (idx + 1 < samples.size() && samples[idx + 1].t <= t) {
        ++idx;
    }
    return std::min(idx, samples.size() - 1);
}

bool PassProfile::any_visible() const {
    return std::any_of(samples.begin(), samples.end(), [](const PassSample& s) { return s.visible; });
}

double diffraction_gain(double distance_m, double tx_diameter_m, double rx_diameter_m,
                        double wavelength_m) {
    const double amplitude =
        std::numbers::pi * tx_diameter_m * rx_diameter_m / (4.0 * wavelength_m * distance_m);
    return std::min(1.0, amplitude * amplitude);
}

double atmospheric_transmission(double zenith_transmission, double elevation_deg) {
    return std::pow(zenith_transmission, 1.0 / std::sin(elevation_deg * kDeg));
}

double link_budget(double distance_m, double elevation_deg, const SatelliteConfig& sat,
                   const GroundStation& station, const OpticalParams& optics) {
    if (!(distance_m > 0.0)) {
        throw ContractError("link_budget: distance must be > 0");
    }
    if (!(elevation_deg > 0.0)) {
        throw ContractError("link_budget: elevation must be > 0 for a visible sample");
    }
    const double eta = diffraction_gain(distance_m, sat.tx_telescope_diameter_m,
                                        station.rx_telescope_diameter_m, optics.wavelength_m) *
                       atmospheric_transmission(optics.zenith_atmospheric_transmission, elevation_deg) *
                       optics.system_efficiency;
    return std::clamp(eta, 0.0, 1.0);
}

Geometry compute_geometry(const SatelliteConfig& sat, const GroundStation& station, double t) {
    const State s = satellite_state(sat, t);
    const State g = station_state(station, t);
    const Vec3 d = sub(s.position, g.position);
    const Vec3 dv = sub(s.velocity, g.velocity);
    const double range = norm(d);
    const Vec3& up = g.position;
    const double sin_el = std::clamp(dot(d, up) / (range * norm(up)), -1.0, 1.0);
    return Geometry{range, std::asin(sin_el) / kDeg, dot(d, dv) / range};
}

PassProfile propagate_pass(const SatelliteConfig& sat, const GroundStation& station,
                           const OpticalParams& optics, const std::string& epoch,
                           double duration_s, double step_s) {
    sat.validate();
    station.validate();
    optics.validate();
    if (!(step_s > 0.0) || !std::isfinite(step_s)) {
        throw ConfigError("propagate_pass: step must be > 0");
    }
    if (!(duration_s > 0.0) || !std::isfinite(duration_s) || duration_s / step_s < 2.0) {
        throw ConfigError("propagate_pass: duration must cover at least two steps");
    }

    PassProfile profile;
    profile.station = station.name;
    profile.epoch = epoch;
    profile.sample_step = step_s;
    const auto count = static_cast<std::size_t>(std::floor(duration_s / step_s + 1e-9)) + 1;
    profile.samples.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double t = static_cast<double>(k) * step_s;
        const Geometry g = compute_geometry(sat, station, t);
        PassSample s;
        s.t = t;
        s.distance_m = g.distance_m;
        s.elevation_deg = g.elevation_deg;
        s.radial_velocity_mps = g.radial_velocity_mps;
        s.visible = g.elevation_deg >= station.min_elevation_deg;
        s.eta = s.visible ? link_budget(g.distance_m, g.elevation_deg, sat, station, optics) : 0.0;
        profile.samples.push_back(s);
    }
    return profile;
}

std::pair<double, double> subsatellite_point(const SatelliteConfig& sat, double t) {
    const State s = satellite_state(sat, t);
    const double r = norm(s.position);
    const double lat = std::asin(s.position[2] / r) / kDeg;
    double lon = (std::atan2(s.position[1], s.position[0]) - earth::kRotationRate * t) / kDeg;
    lon = std::remainder(lon, 360.0);
    return {lat, lon};
}

} // namespace satlink
