#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace rlcband {

/// Directed-rounding primitives on doubles.
///
/// Each function returns a representable bound on the exact real result of
/// the operation: the `_down` variants never exceed it, the `_up` variants are
/// never below it. The rounded-to-nearest result is returned unchanged when an
/// error-free transformation (TwoSum, FMA residual) proves it already lies on
/// the required side; otherwise it is stepped one ulp outward. Results that
/// overflow are returned as infinities and rejected by the Interval layer.
namespace rounding {

double add_down(double a, double b) noexcept;
double add_up(double a, double b) noexcept;
double sub_down(double a, double b) noexcept;
double sub_up(double a, double b) noexcept;
double mul_down(double a, double b) noexcept;
double mul_up(double a, double b) noexcept;
double div_down(double a, double b) noexcept;
double div_up(double a, double b) noexcept;
double sqrt_down(double x) noexcept;
double sqrt_up(double x) noexcept;

/// Steps `x` `n` ulps toward -inf / +inf.
double step_down(double x, int n = 1) noexcept;
double step_up(double x, int n = 1) noexcept;

}  // namespace rounding

/// Closed real interval [lo, hi] with finite endpoints.
///
/// Values are immutable; every arithmetic operation returns an enclosure of
/// the exact set result, so containment of the true value is preserved through
/// any chain of operations. Degenerate intervals stand for exact reals.
class Interval {
 public:
  /// Throws InvalidInterval if lo > hi and NonFinite for NaN/inf input.
  Interval(double lo, double hi);

  static Interval point(double x) { return Interval(x, x); }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  bool is_point() const noexcept { return lo_ == hi_; }
  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const noexcept {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }

  /// hi - lo, rounded up.
  double width() const noexcept;
  /// (lo + hi) / 2, always inside the interval.
  double midpoint() const noexcept;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

Interval operator-(const Interval& x) noexcept;
Interval operator+(const Interval& x, const Interval& y);
Interval operator-(const Interval& x, const Interval& y);
Interval operator*(const Interval& x, const Interval& y);
/// Throws DivisionByZeroInterval when 0 is in y.
Interval operator/(const Interval& x, const Interval& y);

inline Interval& operator+=(Interval& x, const Interval& y) { return x = x + y; }
inline Interval& operator-=(Interval& x, const Interval& y) { return x = x - y; }
inline Interval& operator*=(Interval& x, const Interval& y) { return x = x * y; }
inline Interval& operator/=(Interval& x, const Interval& y) { return x = x / y; }

/// [1 / hi, 1 / lo]; same zero-containment rule as division.
Interval reciprocal(const Interval& y);

/// Set intersection; std::nullopt is the empty set.
std::optional<Interval> intersect(const Interval& x, const Interval& y) noexcept;
/// Interval hull [min lo, max hi]; defined for disjoint arguments too.
Interval hull(const Interval& x, const Interval& y) noexcept;

/// [nominal * (1 - tol), nominal * (1 + tol)], outward rounded.
/// A 100 ohm part at 5% is `from_nominal_tolerance(100, 0.05)`.
Interval from_nominal_tolerance(double nominal, double tol_fraction);

/// "[lo; hi]" with `significant_digits` digits per endpoint. Endpoints are
/// rounded outward in decimal, so the printed interval still encloses `x`.
std::string to_string(const Interval& x, int significant_digits = 17);
std::ostream& operator<<(std::ostream& os, const Interval& x);
/// Same contract in fixed-point report style, e.g. "[0.6656; 0.9231]".
std::string to_report_string(const Interval& x, int significant_digits);

/// Parses "[lo; hi]", "[lo, hi]" or a plain number (degenerate interval).
Interval parse_interval(const std::string& text);

}  // namespace rlcband
