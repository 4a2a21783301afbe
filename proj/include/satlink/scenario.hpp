#pragma once

#include "satlink/pass_model.hpp"

#include <string>

namespace satlink::scenario {

/// Epoch label used by the reference pass.
inline constexpr const char* kReferenceEpoch = "2023-01-02T10:00:00Z";
inline constexpr double kReferenceDuration = 600.0;

/// Sun-synchronous 500 km circular orbit, 10 cm transmit aperture, phased so that the
/// ground track runs between the two reference stations during the first ten minutes.
SatelliteConfig reference_satellite(int memory_slots = 100);

/// Southern station (leg A of the reference scenario), 1 m receiver.
GroundStation nice();
/// Northern station (leg B of the reference scenario), 1 m receiver.
GroundStation paris();

OpticalParams reference_optics();

/// Pass of the reference satellite over `station`, sampled every second.
PassProfile reference_pass(const GroundStation& station, int memory_slots = 100);

/// Synthetic profile with every sample visible and the same geometry and transmission.
PassProfile constant_profile(const std::string& station, double duration_s, double distance_m,
                             double eta, double radial_velocity_mps = 0.0, double step_s = 1.0,
                             double elevation_deg = 90.0);

} // namespace satlink::scenario
