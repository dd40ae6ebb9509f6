#include "rlcband/format.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace rlcband {
namespace {

// printf honours the dynamic rounding mode under glibc; the guard restores it.
class RoundingModeGuard {
 public:
  explicit RoundingModeGuard(Rounding mode) : saved_(std::fegetround()) {
    if (mode == Rounding::Down) std::fesetround(FE_DOWNWARD);
    if (mode == Rounding::Up) std::fesetround(FE_UPWARD);
  }
  ~RoundingModeGuard() { std::fesetround(saved_); }
  RoundingModeGuard(const RoundingModeGuard&) = delete;
  RoundingModeGuard& operator=(const RoundingModeGuard&) = delete;

 private:
  int saved_;
};

std::string print_g(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

template <typename Print>
std::string directed(double x, Rounding mode, Print print) {
  std::string text;
  {
    RoundingModeGuard guard(mode);
    text = print();
  }
  if (mode == Rounding::Nearest) return text;
  const double back = std::strtod(text.c_str(), nullptr);
  const bool ok = mode == Rounding::Down ? back <= x : back >= x;
  return ok ? text : print_g(x, 17);
}

}  // namespace

std::string format_real(double x, int digits, Rounding mode) {
  return directed(x, mode, [&] { return print_g(x, digits); });
}

std::string format_decimal(double x, int significant, Rounding mode) {
  const double magnitude = std::fabs(x);
  if (x != 0.0 && (magnitude < 1e-6 || magnitude >= 1e9)) {
    return directed(x, mode, [&] {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*e", std::max(significant - 1, 0), x);
      return std::string(buf);
    });
  }
  const int exponent = x == 0.0 ? 0 : static_cast<int>(std::floor(std::log10(magnitude)));
  const int decimals = std::max(significant - 1 - exponent, 0);
  return directed(x, mode, [&] {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return std::string(buf);
  });
}

}  // namespace rlcband
