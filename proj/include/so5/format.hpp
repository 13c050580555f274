#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace so5 {

/// Render a double with 17 significant digits in %g style.  Seventeen digits
/// round-trip every IEEE-754 double, and std::to_chars is locale-independent,
/// so emitted files are byte-stable across runs and environments.
inline std::string format_double17(double value) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (res.ec != std::errc())
    return "nan";  // unreachable for finite doubles with this buffer size
  return std::string(buf, res.ptr);
}

}  // namespace so5
