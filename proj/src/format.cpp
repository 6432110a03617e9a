#include "clustcmp/format.hpp"

#include <charconv>

namespace clustcmp {

std::string format_value(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                 std::chars_format::general, 12);
  return std::string(buffer, ptr);
}

}  // namespace clustcmp
