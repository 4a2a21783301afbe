#include "satlink/profile_csv.hpp"

#include "satlink/errors.hpp"
#include "satlink/format.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

namespace satlink {

namespace {

constexpr std::array<const char*, 6> kColumns = {
    "t_s", "distance_m", "elevation_deg", "radial_velocity_mps", "eta", "visible"};

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

[[noreturn]] void fail(std::size_t row, const std::string& column, const std::string& msg) {
    std::string where = row == 0 ? std::string("header") : "row " + std::to_string(row);
    if (!column.empty()) {
        where += ", column " + column;
    }
    throw ParseError("pass CSV " + where + ": " + msg, row, column);
}

std::string_view strip_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') {
        s.remove_suffix(1);
    }
    return s;
}

void parse_metadata(std::string_view line, PassProfile& profile) {
    if (line.size() < 2 || line[0] != '#') {
        fail(0, "", "expected metadata line '# station=<name> epoch=<ISO8601> step_s=<value>'");
    }
    line.remove_prefix(1);
    bool have_station = false, have_epoch = false, have_step = false;
    for (std::string_view token : split(line, ' ')) {
        if (token.empty()) {
            continue;
        }
        const std::size_t eq = token.find('=');
        if (eq == std::string_view::npos) {
            fail(0, "", "malformed metadata token '" + std::string(token) + "'");
        }
        const std::string_view key = token.substr(0, eq);
        const std::string_view value = token.substr(eq + 1);
        if (key == "station") {
            profile.station = std::string(value);
            have_station = !value.empty();
        } else if (key == "epoch") {
            profile.epoch = std::string(value);
            have_epoch = !value.empty();
        } else if (key == "step_s") {
            if (!parse_double(value, profile.sample_step) || !(profile.sample_step > 0.0)) {
                fail(0, "step_s", "step must be a positive number");
            }
            have_step = true;
        } else {
            fail(0, "", "unknown metadata key '" + std::string(key) + "'");
        }
    }
    if (!have_station || !have_epoch || !have_step) {
        fail(0, "", "metadata must define station, epoch and step_s");
    }
}

} // namespace

void write_profile(const PassProfile& profile, std::ostream& out) {
    profile.validate();
    out << "# station=" << profile.station << " epoch=" << profile.epoch
        << " step_s=" << format_double(profile.sample_step) << '\n';
    out << kProfileHeader << '\n';
    for (const PassSample& s : profile.samples) {
        out << format_double(s.t) << ',' << format_double(s.distance_m) << ','
            << format_double(s.elevation_deg) << ',' << format_double(s.radial_velocity_mps) << ','
            << format_double(s.eta) << ',' << (s.visible ? '1' : '0') << '\n';
    }
}

void write_profile(const PassProfile& profile, const std::string& path) {
    std::ostringstream buf;
    write_profile(profile, buf);
    write_file_atomic(path, buf.str());
}

PassProfile read_profile(std::istream& in) {
    PassProfile profile;
    std::string line;
    if (!std::getline(in, line)) {
        fail(0, "", "empty input");
    }
    parse_metadata(strip_cr(line), profile);
    if (!std::getline(in, line) || strip_cr(line) != kProfileHeader) {
        fail(0, "", std::string("header must be exactly '") + kProfileHeader + "'");
    }

    std::size_t row = 0;
    while (std::getline(in, line)) {
        const std::string_view text = strip_cr(line);
        if (text.empty()) {
            continue;
        }
        ++row;
        const auto fields = split(text, ',');
        if (fields.size() != kColumns.size()) {
            fail(row, "", "expected " + std::to_string(kColumns.size()) + " fields, got " +
                              std::to_string(fields.size()));
        }
        std::array<double, 5> v{};
        for (std::size_t c = 0; c < 5; ++c) {
            if (!parse_double(fields[c], v[c]) || !std::isfinite(v[c])) {
                fail(row, kColumns[c], "not a finite number: '" + std::string(fields[c]) + "'");
            }
        }
        PassSample s;
        s.t = v[0];
        s.distance_m = v[1];
        s.elevation_deg = v[2];
        s.radial_velocity_mps = v[3];
        s.eta = v[4];
        if (fields[5] == "1") {
            s.visible = true;
        } else if (fields[5] != "0") {
            fail(row, "visible", "must be 0 or 1");
        }

        if (!profile.samples.empty()) {
            const double dt = s.t - profile.samples.back().t;
            if (!(dt > 0.0)) {
                fail(row, "t_s", "time not strictly increasing");
            }
            if (std::abs(dt - profile.sample_step) > 1e-6) {
                fail(row, "t_s", "spacing differs from step_s");
            }
        }
        if (!(s.distance_m > 0.0)) {
            fail(row, "distance_m", "distance must be > 0");
        }
        if (!(s.elevation_deg >= -90.0 && s.elevation_deg <= 90.0)) {
            fail(row, "elevation_deg", "elevation outside [-90, 90]");
        }
        if (!(s.eta >= 0.0 && s.eta <= 1.0)) {
            fail(row, "eta", "eta outside [0, 1]");
        }
        if (!s.visible && s.eta != 0.0) {
            fail(row, "eta", "eta must be 0 when not visible");
        }
        profile.samples.push_back(s);
    }
    if (profile.samples.size() < 2) {
        fail(row, "", "at least 2 samples required");
    }
    return profile;
}

PassProfile read_profile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open pass CSV '" + path + "'", 0, "");
    }
    try {
        return read_profile(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.row(), e.column());
    }
}

} // namespace satlink
