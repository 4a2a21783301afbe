#pragma once

#include "satlink/pass_model.hpp"

#include <iosfwd>
#include <string>

namespace satlink {

/// Pass CSV layout:
///
///     # station=<name> epoch=<ISO8601> step_s=<value>
///     t_s,distance_m,elevation_deg,radial_velocity_mps,eta,visible
///     0,500000,90,0,0.0103,1
///
/// Numbers are written with the shortest representation that round-trips exactly.
inline constexpr const char* kProfileHeader =
    "t_s,distance_m,elevation_deg,radial_velocity_mps,eta,visible";

void write_profile(const PassProfile& profile, std::ostream& out);
void write_profile(const PassProfile& profile, const std::string& path);

/// Throws ParseError naming the offending data row and column.
PassProfile read_profile(std::istream& in);
PassProfile read_profile(const std::string& path);

} // namespace satlink
