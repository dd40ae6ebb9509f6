#pragma once

#include <string>

namespace rlcband {

enum class Rounding { Nearest, Down, Up };

/// "%g"-style text with `digits` significant digits. 17 digits round-trip
/// every double. Down / Up guarantee the printed value is <= / >= x.
std::string format_real(double x, int digits = 17, Rounding mode = Rounding::Nearest);

/// Fixed-point text with `significant` significant digits, trailing zeros
/// kept (0.8440, 10000, 0.0003146). Falls back to exponent notation outside
/// [1e-6, 1e9). Same rounding contract as format_real.
std::string format_decimal(double x, int significant, Rounding mode = Rounding::Nearest);

}  // namespace rlcband
