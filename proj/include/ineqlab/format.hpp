#ifndef INEQLAB_FORMAT_HPP
#define INEQLAB_FORMAT_HPP

#include <charconv>
#include <string>
#include <system_error>

namespace ineqlab {

/// Locale-independent %.{prec}g formatting ('.' decimal separator always).
inline std::string fmt_g(double v, int precision = 15) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, precision);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

}  // namespace ineqlab

#endif
