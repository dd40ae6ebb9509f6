#include "rlcband/elementary.hpp"

#include <algorithm>
#include <cmath>

#include "rlcband/error.hpp"

namespace rlcband {
namespace {

using rounding::step_down;
using rounding::step_up;

constexpr int kWiden = 2;
// Largest double below pi; the next double above it exceeds pi.
constexpr double kPiLo = 3.141592653589793115997963468544185161590576171875;
constexpr double kMaxTrigArgument = 0x1p52;

double pi_hi() noexcept { return std::nextafter(kPiLo, 4.0); }

// Endpoint values the C library returns exactly need no widening.
double down(double value, bool exact) { return exact ? value : step_down(value, kWiden); }
double up(double value, bool exact) { return exact ? value : step_up(value, kWiden); }

Interval widened(double lo, double hi) {
  lo = step_down(lo, kWiden);
  hi = step_up(hi, kWiden);
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::Overflow, "elementary function result overflowed");
  }
  return Interval(lo, hi);
}

Interval clamped(Interval x, double lo, double hi) {
  return Interval(std::clamp(x.lo(), lo, hi), std::clamp(x.hi(), lo, hi));
}

// True if x may contain a point offset + k * 2pi for some integer k. May
// report a false positive within rounding distance of such a point, never a
// false negative.
bool may_contain_lattice_point(const Interval& x, const Interval& offset) {
  const Interval two_pi = Interval::point(2.0) * pi_interval();
  const Interval q = (x - offset) / two_pi;
  return std::floor(q.hi()) >= std::ceil(q.lo());
}

void check_trig_argument(const Interval& x) {
  if (std::fabs(x.lo()) > kMaxTrigArgument || std::fabs(x.hi()) > kMaxTrigArgument) {
    throw Error(ErrorCode::PrecisionLoss,
                "trigonometric argument " + to_string(x) + " beyond 2^52 rad");
  }
}

// Shared sin/cos logic: `f` is the point function, `max_at` / `min_at` the
// lattice offsets of its maxima and minima.
template <typename F>
Interval periodic_range(const Interval& x, F f, const Interval& max_at, const Interval& min_at) {
  check_trig_argument(x);
  if (rounding::sub_down(x.hi(), x.lo()) >= 2.0 * pi_hi()) return Interval(-1.0, 1.0);
  const double fa = f(x.lo());
  const double fb = f(x.hi());
  Interval range = widened(std::min(fa, fb), std::max(fa, fb));
  double lo = range.lo();
  double hi = range.hi();
  if (may_contain_lattice_point(x, max_at)) hi = 1.0;
  if (may_contain_lattice_point(x, min_at)) lo = -1.0;
  return clamped(Interval(std::min(lo, hi), std::max(lo, hi)), -1.0, 1.0);
}

}  // namespace

Interval pi_interval() noexcept { return Interval(kPiLo, pi_hi()); }

Interval iexp(const Interval& x) {
  const double lo = std::max(down(std::exp(x.lo()), x.lo() == 0.0), 0.0);
  const double hi = up(std::exp(x.hi()), x.hi() == 0.0);
  if (!std::isfinite(hi)) throw Error(ErrorCode::Overflow, "exp of " + to_string(x));
  return Interval(lo, hi);
}

Interval iln(const Interval& x) {
  if (x.lo() <= 0.0) {
    throw Error(ErrorCode::NonPositiveArgument, "ln of " + to_string(x));
  }
  return Interval(down(std::log(x.lo()), x.lo() == 1.0), up(std::log(x.hi()), x.hi() == 1.0));
}

Interval isqrt(const Interval& x) {
  if (x.lo() < 0.0) {
    throw Error(ErrorCode::NegativeArgument, "sqrt of " + to_string(x));
  }
  return Interval(rounding::sqrt_down(x.lo()), rounding::sqrt_up(x.hi()));
}

Interval icos(const Interval& x) {
  if (x == Interval::point(0.0)) return Interval::point(1.0);
  return periodic_range(
      x, [](double v) { return std::cos(v); }, Interval::point(0.0), pi_interval());
}

Interval isin(const Interval& x) {
  if (x == Interval::point(0.0)) return Interval::point(0.0);
  const Interval half_pi = pi_interval() / Interval::point(2.0);
  return periodic_range(
      x, [](double v) { return std::sin(v); }, half_pi, -half_pi);
}

Interval iacos(const Interval& x) {
  const auto domain = intersect(x, Interval(-1.0, 1.0));
  if (!domain) {
    throw Error(ErrorCode::DomainViolation, "acos of " + to_string(x));
  }
  // Antitone: the upper argument gives the lower result.
  const Interval r(down(std::acos(domain->hi()), domain->hi() == 1.0),
                   up(std::acos(domain->lo()), domain->lo() == 1.0));
  return clamped(r, 0.0, pi_hi());
}

Interval iatan(const Interval& x) {
  if (x == Interval::point(0.0)) return Interval::point(0.0);
  const double half_pi_hi = pi_hi() / 2.0;
  return clamped(widened(std::atan(x.lo()), std::atan(x.hi())), -half_pi_hi, half_pi_hi);
}

}  // namespace rlcband
