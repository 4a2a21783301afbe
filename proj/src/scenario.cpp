#include "satlink/scenario.hpp"

#include "satlink/errors.hpp"

#include <cmath>

namespace satlink::scenario {

SatelliteConfig reference_satellite(int memory_slots) {
    SatelliteConfig sat;
    sat.orbit_altitude_m = 500.0e3;
    sat.orbit_inclination_deg = 97.4;
    sat.raan_deg = 14.5;
    sat.phase_at_epoch_deg = 28.0;
    sat.tx_telescope_diameter_m = 0.1;
    sat.memory_slots = memory_slots;
    return sat;
}

GroundStation nice() {
    GroundStation g;
    g.name = "Nice";
    g.latitude_deg = 43.70;
    g.longitude_deg = 7.27;
    g.altitude_m = 0.0;
    g.rx_telescope_diameter_m = 1.0;
    g.min_elevation_deg = 20.0;
    return g;
}

GroundStation paris() {
    GroundStation g;
    g.name = "Paris";
    g.latitude_deg = 48.86;
    g.longitude_deg = 2.35;
    g.altitude_m = 0.0;
    g.rx_telescope_diameter_m = 1.0;
    g.min_elevation_deg = 20.0;
    return g;
}

OpticalParams reference_optics() {
    OpticalParams o;
    o.wavelength_m = 1550e-9;
    o.zenith_atmospheric_transmission = 0.9;
    o.system_efficiency = 1.0;
    return o;
}

PassProfile reference_pass(const GroundStation& station, int memory_slots) {
    return propagate_pass(reference_satellite(memory_slots), station, reference_optics(), kReferenceEpoch,
                          kReferenceDuration, 1.0);
}

PassProfile constant_profile(const std::string& station, double duration_s, double distance_m,
                             double eta, double radial_velocity_mps, double step_s,
                             double elevation_deg) {
    if (!(duration_s / step_s >= 2.0)) {
        throw ConfigError("constant_profile: duration must cover at least two steps");
    }
    PassProfile p;
    p.station = station;
    p.epoch = kReferenceEpoch;
    p.sample_step = step_s;
    const auto count = static_cast<std::size_t>(std::floor(duration_s / step_s + 1e-9));
    for (std::size_t k = 0; k < count; ++k) {
        PassSample s;
        s.t = static_cast<double>(k) * step_s;
        s.distance_m = distance_m;
        s.elevation_deg = elevation_deg;
        s.radial_velocity_mps = radial_velocity_mps;
        s.eta = eta;
        s.visible = true;
        p.samples.push_back(s);
    }
    p.validate();
    return p;
}

} // namespace satlink::scenario
