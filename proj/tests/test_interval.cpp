#include <catch2/catch_amalgamated.hpp>

#include <cfloat>
#include <cmath>
#include <limits>

#include "oracle.hpp"
#include "rlcband/error.hpp"
#include "rlcband/interval.hpp"

using namespace rlcband;
using oracle::Rational;

namespace {

constexpr int kSamples = 100000;

template <typename F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

// Exact range of x op y from the four corner values (valid for + - * /
// because each is monotone per argument on intervals avoiding poles).
template <typename Op>
std::pair<Rational, Rational> exact_range(const Interval& x, const Interval& y, Op op) {
  const Rational xs[2] = {Rational(x.lo()), Rational(x.hi())};
  const Rational ys[2] = {Rational(y.lo()), Rational(y.hi())};
  Rational lo = op(xs[0], ys[0]);
  Rational hi = lo;
  for (const auto& a : xs) {
    for (const auto& b : ys) {
      const Rational v = op(a, b);
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  return {lo, hi};
}

bool within_ulps(const Interval& got, const std::pair<Rational, Rational>& exact, int ulps) {
  return Rational(rounding::step_up(got.lo(), ulps)) >= exact.first &&
         Rational(rounding::step_down(got.hi(), ulps)) <= exact.second;
}

Interval positive_interval(oracle::DoubleSource& src) {
  double a = src.positive();
  double b = src.positive();
  if (a > b) std::swap(a, b);
  return Interval(a, b);
}

}  // namespace

TEST_CASE("construction validates endpoints") {
  const Interval x(1.0, 2.0);
  CHECK(x.lo() == 1.0);
  CHECK(x.hi() == 2.0);
  CHECK(Interval(3.0, 3.0).is_point());
  expect_error(ErrorCode::InvalidInterval, [] { Interval(2.0, 1.0); });
  expect_error(ErrorCode::NonFinite, [] { Interval(std::nan(""), 1.0); });
  expect_error(ErrorCode::NonFinite,
               [] { Interval(0.0, std::numeric_limits<double>::infinity()); });
}

TEST_CASE("nominal and tolerance") {
  const Interval r = from_nominal_tolerance(100.0, 0.05);
  CHECK(r.lo() <= 95.0);
  CHECK(r.lo() >= rounding::step_down(95.0, 2));
  CHECK(r.hi() >= 105.0);
  CHECK(r.hi() <= rounding::step_up(105.0, 2));

  const Interval c = from_nominal_tolerance(10e-9, 0.20);
  CHECK(oracle::encloses(c, Rational(10e-9) * (1 - Rational(0.20))));
  CHECK(oracle::encloses(c, Rational(10e-9) * (1 + Rational(0.20))));
  CHECK(c.lo() >= rounding::step_down(8e-9, 4));
  CHECK(c.hi() <= rounding::step_up(12e-9, 4));

  CHECK(from_nominal_tolerance(47.0, 0.0) == Interval::point(47.0));
  expect_error(ErrorCode::InvalidSpec, [] { from_nominal_tolerance(1.0, -0.1); });
  expect_error(ErrorCode::InvalidSpec, [] { from_nominal_tolerance(1.0, 1.0); });
}

TEST_CASE("addition and subtraction") {
  CHECK(Interval(1, 2) + Interval(3, 4) == Interval(4, 6));
  CHECK(Interval::point(0.1) + Interval::point(0.0) == Interval::point(0.1));

  const Interval s = Interval::point(0.1) + Interval::point(0.2);
  CHECK(s.contains(0.3));
  CHECK(oracle::encloses(s, Rational(0.1) + Rational(0.2)));
  CHECK(rounding::step_up(s.lo(), 1) >= s.hi());

  expect_error(ErrorCode::Overflow,
               [] { Interval::point(DBL_MAX) + Interval::point(DBL_MAX); });

  CHECK(Interval(1, 2) - Interval(3, 4) == Interval(-3, -1));
  CHECK(Interval(0, 1) - Interval(0, 1) == Interval(-1, 1));
  CHECK(Interval::point(5) - Interval::point(5) == Interval::point(0));
}

TEST_CASE("multiplication and division") {
  CHECK(Interval(-1, 2) * Interval(3, 4) == Interval(-4, 8));
  CHECK(Interval::point(0) * Interval(-7, 3) == Interval::point(0));
  CHECK(Interval(0, 1) * Interval(0, 1) == Interval(0, 1));
  CHECK(Interval(-2, -1) * Interval(-3, 5) == Interval(-10, 6));

  CHECK(Interval(1, 2) / Interval(2, 4) == Interval(0.25, 1));
  CHECK(Interval(-3, 7) / Interval::point(1) == Interval(-3, 7));
  expect_error(ErrorCode::DivisionByZeroInterval, [] { Interval(1, 2) / Interval(-1, 1); });
  expect_error(ErrorCode::DivisionByZeroInterval, [] { reciprocal(Interval(0, 1)); });

  const Interval third = Interval::point(1) / Interval::point(3);
  CHECK(oracle::encloses(third, Rational(1, 3)));
  CHECK(rounding::step_up(third.lo(), 1) == third.hi());
  CHECK(reciprocal(Interval(2, 4)) == Interval(0.25, 0.5));
}

TEST_CASE("set operations and accessors") {
  CHECK(intersect(Interval(1, 3), Interval(2, 4)) == Interval(2, 3));
  CHECK(intersect(Interval(1, 2), Interval(2, 4)) == Interval::point(2));
  CHECK_FALSE(intersect(Interval(1, 2), Interval(3, 4)).has_value());
  CHECK(hull(Interval(1, 2), Interval(5, 6)) == Interval(1, 6));

  const Interval x(1, 3);
  CHECK(x.contains(1.0));
  CHECK(x.contains(3.0));
  CHECK_FALSE(x.contains(3.5));
  CHECK(x.contains(Interval(1.5, 2)));
  CHECK_FALSE(x.contains(Interval(0, 2)));
  CHECK(x.width() == 2.0);
  CHECK(x.midpoint() == 2.0);
  CHECK(Interval(-1, 1).contains_zero());
  CHECK(Interval(DBL_MAX / 2, DBL_MAX).midpoint() <= DBL_MAX);
  const Interval tiny(std::nextafter(1.0, 0.0), 1.0);
  CHECK(tiny.contains(tiny.midpoint()));
}

TEST_CASE("dependency effect") {
  const Interval x(0, 1);
  const Interval one = Interval::point(1);
  CHECK(x * (one - x) == Interval(0, 1));
  CHECK(x - x * x == Interval(-1, 1));
}

TEST_CASE("printing encloses and parses back") {
  CHECK(to_string(Interval(1, 2)) == "[1; 2]");
  CHECK(to_string(Interval(0.25, 0.5), 3) == "[0.25; 0.5]");
  CHECK(to_report_string(Interval(0.625, 0.875), 4) == "[0.6250; 0.8750]");
  // 0.6656 is not a double; the outward-rounded text must enclose it.
  CHECK(to_report_string(Interval::point(0.6656), 4) == "[0.6655; 0.6656]");

  oracle::DoubleSource src(7);
  for (int i = 0; i < 2000; ++i) {
    const Interval x = src.interval(-20, 20);
    for (int digits : {3, 6, 17}) {
      INFO(to_string(x) << " at " << digits << " digits");
      CHECK(parse_interval(to_string(x, digits)).contains(x));
      CHECK(parse_interval(to_report_string(x, digits)).contains(x));
    }
  }

  CHECK(parse_interval("[1.5; 2.5]") == Interval(1.5, 2.5));
  CHECK(parse_interval("[1.5, 2.5]") == Interval(1.5, 2.5));
  CHECK(parse_interval(" 0.7125 ") == Interval::point(0.7125));
  expect_error(ErrorCode::Config, [] { parse_interval("[1; 2"); });
  expect_error(ErrorCode::Config, [] { parse_interval("abc"); });
  expect_error(ErrorCode::InvalidInterval, [] { parse_interval("[2; 1]"); });
}

TEST_CASE("arithmetic contains the exact result of member operands") {
  oracle::DoubleSource src(20240101);
  int violations = 0;
  for (int i = 0; i < kSamples; ++i) {
    const Interval x = src.interval();
    Interval y = src.interval();
    const double a = src.member(x);
    const double b = src.member(y);
    const Rational ra(a);
    const Rational rb(b);
    if (!oracle::encloses(x + y, ra + rb)) ++violations;
    if (!oracle::encloses(x - y, ra - rb)) ++violations;
    if (!oracle::encloses(x * y, ra * rb)) ++violations;
    if (!y.contains_zero()) {
      if (!oracle::encloses(x / y, ra / rb)) ++violations;
    } else {
      const Interval yp = positive_interval(src);
      const double c = src.member(yp);
      if (!oracle::encloses(x / yp, ra / Rational(c))) ++violations;
      if (!oracle::encloses(x / -yp, -ra / Rational(c))) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("endpoints stay within two ulps of the exact range") {
  oracle::DoubleSource src(99);
  const auto add = [](const Rational& a, const Rational& b) { return Rational(a + b); };
  const auto sub = [](const Rational& a, const Rational& b) { return Rational(a - b); };
  const auto mul = [](const Rational& a, const Rational& b) { return Rational(a * b); };
  const auto div = [](const Rational& a, const Rational& b) { return Rational(a / b); };
  int loose = 0;
  for (int i = 0; i < 20000; ++i) {
    const Interval x = src.interval();
    const Interval y = src.interval();
    const Interval yp = positive_interval(src);
    if (!within_ulps(x + y, exact_range(x, y, add), 2)) ++loose;
    if (!within_ulps(x - y, exact_range(x, y, sub), 2)) ++loose;
    if (!within_ulps(x * y, exact_range(x, y, mul), 2)) ++loose;
    if (!within_ulps(x / yp, exact_range(x, yp, div), 2)) ++loose;
  }
  CHECK(loose == 0);
}

TEST_CASE("algebraic properties") {
  oracle::DoubleSource src(4242);
  for (int i = 0; i < 20000; ++i) {
    const Interval x = src.interval();
    const Interval y = src.interval();
    const Interval z = src.interval();

    CHECK(x + y == y + x);
    CHECK(x * y == y * x);

    // Inclusion isotonicity: shrinking an operand shrinks the result.
    const Interval xs = src.interval_in(x.lo(), x.hi());
    const Interval ys = src.interval_in(y.lo(), y.hi());
    CHECK((x + y).contains(xs + ys));
    CHECK((x - y).contains(xs - ys));
    CHECK((x * y).contains(xs * ys));
    if (!y.contains_zero()) CHECK((x / y).contains(xs / ys));
  }
}

TEST_CASE("subdistributivity") {
  // Small dyadic endpoints keep every operation exact, so the set law holds
  // without rounding slack.
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> n(-4096, 4096);
  const auto dyadic = [&] {
    double a = n(rng) / 64.0, b = n(rng) / 64.0;
    return Interval(std::min(a, b), std::max(a, b));
  };
  for (int i = 0; i < 20000; ++i) {
    const Interval x = dyadic(), y = dyadic(), z = dyadic();
    CHECK((x * y + x * z).contains(x * (y + z)));
  }
  CHECK(Interval(-1, 1) * (Interval::point(1) + Interval::point(-1)) == Interval::point(0));
  CHECK(Interval(-1, 1) * Interval::point(1) + Interval(-1, 1) * Interval::point(-1) ==
        Interval(-2, 2));
}

TEST_CASE("directed primitives bracket the exact result") {
  oracle::DoubleSource src(5);
  for (int i = 0; i < 20000; ++i) {
    const double a = src.any(-60, 60);
    const double b = src.any(-60, 60);
    const Rational ra(a), rb(b);
    CHECK(Rational(rounding::add_down(a, b)) <= ra + rb);
    CHECK(Rational(rounding::add_up(a, b)) >= ra + rb);
    CHECK(Rational(rounding::mul_down(a, b)) <= ra * rb);
    CHECK(Rational(rounding::mul_up(a, b)) >= ra * rb);
    if (b != 0.0) {
      CHECK(Rational(rounding::div_down(a, b)) <= ra / rb);
      CHECK(Rational(rounding::div_up(a, b)) >= ra / rb);
    }
    const double p = std::fabs(a);
    const double lo = rounding::sqrt_down(p);
    const double hi = rounding::sqrt_up(p);
    CHECK(Rational(lo) * Rational(lo) <= Rational(p));
    CHECK(Rational(hi) * Rational(hi) >= Rational(p));
  }
  // Subnormal range, where the residual shortcut does not apply.
  const double tiny = 0x1p-1070;
  CHECK(Rational(rounding::mul_down(tiny, 0.75)) <= Rational(tiny) * Rational(0.75));
  CHECK(Rational(rounding::mul_up(tiny, 0.75)) >= Rational(tiny) * Rational(0.75));
  CHECK(Rational(rounding::div_down(tiny, 3.0)) <= Rational(tiny) / 3);
  CHECK(Rational(rounding::div_up(tiny, 3.0)) >= Rational(tiny) / 3);
}
