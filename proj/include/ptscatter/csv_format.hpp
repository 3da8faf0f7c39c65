#pragma once

#include <string>

namespace ptscatter {

/// Shortest decimal string that round-trips to the same double; "inf",
/// "-inf" and "nan" for non-finite values.
std::string format_double(double value);

}  // namespace ptscatter
