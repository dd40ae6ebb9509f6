#include "rlcband/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>

#include "rlcband/error.hpp"
#include "rlcband/format.hpp"

namespace rlcband {
namespace rounding {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude FMA residuals may be inexact (gradual underflow).
constexpr double kResidualFloor = 0x1p-960;

}  // namespace

double step_down(double x, int n) noexcept {
  for (int i = 0; i < n; ++i) x = std::nextafter(x, -kInf);
  return x;
}

double step_up(double x, int n) noexcept {
  for (int i = 0; i < n; ++i) x = std::nextafter(x, kInf);
  return x;
}

namespace {

// TwoSum: a + b == s + err exactly (barring overflow).
double sum_error(double a, double b, double s) noexcept {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

}  // namespace

double add_down(double a, double b) noexcept {
  const double s = a + b;
  if (!std::isfinite(s)) return s;
  return sum_error(a, b, s) < 0.0 ? step_down(s) : s;
}

double add_up(double a, double b) noexcept {
  const double s = a + b;
  if (!std::isfinite(s)) return s;
  return sum_error(a, b, s) > 0.0 ? step_up(s) : s;
}

double sub_down(double a, double b) noexcept { return add_down(a, -b); }
double sub_up(double a, double b) noexcept { return add_up(a, -b); }

double mul_down(double a, double b) noexcept {
  const double p = a * b;
  if (!std::isfinite(p) || a == 0.0 || b == 0.0) return p;
  if (std::fabs(p) < kResidualFloor) return step_down(p);
  return std::fma(a, b, -p) < 0.0 ? step_down(p) : p;
}

double mul_up(double a, double b) noexcept {
  const double p = a * b;
  if (!std::isfinite(p) || a == 0.0 || b == 0.0) return p;
  if (std::fabs(p) < kResidualFloor) return step_up(p);
  return std::fma(a, b, -p) > 0.0 ? step_up(p) : p;
}

namespace {

// Sign of (a / b - fl(a / b)): -1, 0 or +1; 2 when the residual is unreliable.
int quotient_error_sign(double a, double b, double q) noexcept {
  if (std::fabs(q) < kResidualFloor || std::fabs(a) < kResidualFloor) return 2;
  const double r = std::fma(-q, b, a);
  if (r == 0.0) return 0;
  return (r < 0.0) == (b < 0.0) ? 1 : -1;
}

}  // namespace

double div_down(double a, double b) noexcept {
  const double q = a / b;
  if (!std::isfinite(q) || a == 0.0) return q;
  const int sign = quotient_error_sign(a, b, q);
  return sign < 0 || sign == 2 ? step_down(q) : q;
}

double div_up(double a, double b) noexcept {
  const double q = a / b;
  if (!std::isfinite(q) || a == 0.0) return q;
  const int sign = quotient_error_sign(a, b, q);
  return sign > 0 ? step_up(q) : sign == 2 ? step_up(q) : q;
}

double sqrt_down(double x) noexcept {
  const double s = std::sqrt(x);
  if (x == 0.0 || !std::isfinite(s)) return s;
  if (x < kResidualFloor) return step_down(s);
  return std::fma(-s, s, x) < 0.0 ? step_down(s) : s;
}

double sqrt_up(double x) noexcept {
  const double s = std::sqrt(x);
  if (x == 0.0 || !std::isfinite(s)) return s;
  if (x < kResidualFloor) return step_up(s);
  return std::fma(-s, s, x) > 0.0 ? step_up(s) : s;
}

}  // namespace rounding

namespace {

Interval checked(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::Overflow, "interval endpoint overflowed");
  }
  return Interval(lo, hi);
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::NonFinite, "interval endpoints must be finite");
  }
  if (lo > hi) {
    throw Error(ErrorCode::InvalidInterval,
                "lower endpoint " + format_real(lo) + " exceeds upper " + format_real(hi));
  }
}

double Interval::width() const noexcept { return rounding::sub_up(hi_, lo_); }

double Interval::midpoint() const noexcept {
  const double m = 0.5 * lo_ + 0.5 * hi_;
  return std::clamp(m, lo_, hi_);
}

Interval operator-(const Interval& x) noexcept {
  // Negation is exact and preserves ordering.
  return Interval(-x.hi(), -x.lo());
}

Interval operator+(const Interval& x, const Interval& y) {
  return checked(rounding::add_down(x.lo(), y.lo()), rounding::add_up(x.hi(), y.hi()));
}

Interval operator-(const Interval& x, const Interval& y) {
  return checked(rounding::sub_down(x.lo(), y.hi()), rounding::sub_up(x.hi(), y.lo()));
}

Interval operator*(const Interval& x, const Interval& y) {
  const double a[2] = {x.lo(), x.hi()};
  const double b[2] = {y.lo(), y.hi()};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double u : a) {
    for (double v : b) {
      lo = std::min(lo, rounding::mul_down(u, v));
      hi = std::max(hi, rounding::mul_up(u, v));
    }
  }
  return checked(lo, hi);
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains_zero()) {
    throw Error(ErrorCode::DivisionByZeroInterval,
                "divisor " + to_string(y) + " contains zero");
  }
  const double a[2] = {x.lo(), x.hi()};
  const double b[2] = {y.lo(), y.hi()};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double u : a) {
    for (double v : b) {
      lo = std::min(lo, rounding::div_down(u, v));
      hi = std::max(hi, rounding::div_up(u, v));
    }
  }
  return checked(lo, hi);
}

Interval reciprocal(const Interval& y) { return Interval::point(1.0) / y; }

std::optional<Interval> intersect(const Interval& x, const Interval& y) noexcept {
  const double lo = std::max(x.lo(), y.lo());
  const double hi = std::min(x.hi(), y.hi());
  if (lo > hi) return std::nullopt;
  return Interval(lo, hi);
}

Interval hull(const Interval& x, const Interval& y) noexcept {
  return Interval(std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi()));
}

Interval from_nominal_tolerance(double nominal, double tol_fraction) {
  if (!std::isfinite(nominal) || !std::isfinite(tol_fraction)) {
    throw Error(ErrorCode::NonFinite, "nominal and tolerance must be finite");
  }
  if (tol_fraction < 0.0 || tol_fraction >= 1.0) {
    throw Error(ErrorCode::InvalidSpec,
                "tolerance fraction " + format_real(tol_fraction) + " outside [0, 1)");
  }
  if (tol_fraction == 0.0) return Interval::point(nominal);
  const Interval factor(rounding::sub_down(1.0, tol_fraction),
                        rounding::add_up(1.0, tol_fraction));
  return Interval::point(nominal) * factor;
}

std::string to_string(const Interval& x, int significant_digits) {
  return "[" + format_real(x.lo(), significant_digits, Rounding::Down) + "; " +
         format_real(x.hi(), significant_digits, Rounding::Up) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << to_string(x); }

std::string to_report_string(const Interval& x, int significant_digits) {
  return "[" + format_decimal(x.lo(), significant_digits, Rounding::Down) + "; " +
         format_decimal(x.hi(), significant_digits, Rounding::Up) + "]";
}

namespace {

double parse_number(const std::string& text, const std::string& whole) {
  const char* begin = text.c_str();
  while (*begin == ' ' || *begin == '\t') ++begin;
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin) {
    throw Error(ErrorCode::Config, "cannot parse interval '" + whole + "'");
  }
  while (*end == ' ' || *end == '\t') ++end;
  if (*end != '\0') {
    throw Error(ErrorCode::Config, "trailing characters in interval '" + whole + "'");
  }
  return value;
}

}  // namespace

Interval parse_interval(const std::string& text) {
  const auto open = text.find('[');
  if (open == std::string::npos) return Interval::point(parse_number(text, text));
  const auto close = text.find(']', open);
  auto sep = text.find(';', open);
  if (sep == std::string::npos) sep = text.find(',', open);
  if (close == std::string::npos || sep == std::string::npos || sep > close) {
    throw Error(ErrorCode::Config, "malformed interval '" + text + "'");
  }
  return Interval(parse_number(text.substr(open + 1, sep - open - 1), text),
                  parse_number(text.substr(sep + 1, close - sep - 1), text));
}

}  // namespace rlcband
