#pragma once

#include <string>
#include <string_view>

namespace satlink {

/// Shortest decimal representation that parses back to the same double.
/// Locale independent; always uses '.' as the decimal point.
std::string format_double(double value);

/// Strict locale-independent parse. Returns false on trailing garbage or empty input.
bool parse_double(std::string_view text, double& out);

/// Write `contents` to `path` via a temporary file and rename, so readers never see a partial file.
void write_file_atomic(const std::string& path, const std::string& contents);

} // namespace satlink
