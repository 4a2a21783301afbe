#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace satlink {

namespace earth {
inline constexpr double kRadius = 6371.0e3;           ///< spherical Earth, m
inline constexpr double kMu = 3.986004418e14;         ///< gravitational parameter, m^3/s^2
inline constexpr double kRotationRate = 7.2921159e-5; ///< sidereal rotation, rad/s
} // namespace earth

struct GroundStation {
    std::string name;
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
    double altitude_m = 0.0;
    double rx_telescope_diameter_m = 1.0;
    double min_elevation_deg = 20.0;

    /// Throws ConfigError when a field is out of range.
    void validate() const;
};

/// Circular orbit. Angles are referenced to an inertial frame that coincides with
/// the Earth-fixed frame at the pass epoch, so `raan_deg` is measured from the
/// Greenwich meridian at epoch and `phase_at_epoch_deg` is the argument of latitude.
struct SatelliteConfig {
    double orbit_altitude_m = 500.0e3;
    double orbit_inclination_deg = 97.4;
    double raan_deg = 0.0;
    double phase_at_epoch_deg = 0.0;
    double tx_telescope_diameter_m = 0.1;
    int memory_slots = 100;

    void validate() const;
};

struct OpticalParams {
    double wavelength_m = 1550e-9;
    double zenith_atmospheric_transmission = 1.0;
    double system_efficiency = 1.0;

    void validate() const;
};

struct PassSample {
    double t = 0.0;                   ///< seconds since pass epoch
    double distance_m = 0.0;          ///< slant range
    double elevation_deg = 0.0;
    double radial_velocity_mps = 0.0; ///< positive while the range grows
    double eta = 0.0;                 ///< total downlink transmission
    bool visible = false;

    bool operator==(const PassSample&) const = default;
};

struct PassProfile {
    std::string station;
    std::string epoch; ///< ISO-8601 UTC timestamp, carried through unchanged
    double sample_step = 1.0;
    std::vector<PassSample> samples;

    /// Checks ordering, uniform spacing (1 us tolerance), ranges and the eta/visible coupling.
    void validate() const;

    std::size_t size() const noexcept { return samples.size(); }
    double start_time() const { return samples.front().t; }
    /// End of the zero-order-hold span of the last sample.
    double horizon() const { return samples.back().t + sample_step; }
    /// Index of the sample at or before `t` (clamped to the valid range).
    std::size_t index_at(double t) const;
    bool any_visible() const;
};

/// Far-field diffraction gain capped at one, times zenith transmission raised to the
/// plane-parallel airmass, times the system efficiency.
double link_budget(double distance_m, double elevation_deg, const SatelliteConfig& sat,
                   const GroundStation& station, const OpticalParams& optics);

/// The capped geometric term alone, (pi D_tx D_rx / (4 lambda L))^2 limited to 1.
double diffraction_gain(double distance_m, double tx_diameter_m, double rx_diameter_m,
                        double wavelength_m);

double atmospheric_transmission(double zenith_transmission, double elevation_deg);

struct Geometry {
    double distance_m;
    double elevation_deg;
    double radial_velocity_mps;
};

/// Instantaneous station-to-satellite geometry at `t` seconds after epoch.
Geometry compute_geometry(const SatelliteConfig& sat, const GroundStation& station, double t);

/// Samples the pass at t = 0, step, 2 step, ... up to and including duration. Samples below the
/// station's minimum elevation are marked invisible with eta = 0.
PassProfile propagate_pass(const SatelliteConfig& sat, const GroundStation& station,
                           const OpticalParams& optics, const std::string& epoch,
                           double duration_s, double step_s = 1.0);

/// Latitude/longitude (degrees) of the sub-satellite point at `t`.
std::pair<double, double> subsatellite_point(const SatelliteConfig& sat, double t);

} // namespace satlink
