#ifndef HVAPPROX_FORMAT_HPP
#define HVAPPROX_FORMAT_HPP

#include <cstdio>
#include <string>

namespace hvapprox {

/// Render a double with 12 significant digits; the format used by every CSV
/// and single-value output, so runs are byte-stable.
inline std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace hvapprox

#endif  // HVAPPROX_FORMAT_HPP
