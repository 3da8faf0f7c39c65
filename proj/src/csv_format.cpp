#include "ptscatter/csv_format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace ptscatter {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  // Normalise -0 so golden files do not depend on the sign of zero.
  if (value == 0.0) value = 0.0;
  std::array<char, 32> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), result.ptr);
}

}  // namespace ptscatter
