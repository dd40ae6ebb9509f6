#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rlcband/elementary.hpp"
#include "rlcband/error.hpp"
#include "rlcband/transient_metrics.hpp"

using namespace rlcband;
using Catch::Approx;
using oracle::BigFloat;

namespace {

template <typename F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

BigFloat exact_overshoot(const BigFloat& xi) {
  return boost::multiprecision::exp(-oracle::big_pi() * xi / boost::multiprecision::sqrt(1 - xi * xi));
}

const Interval kNominalOmegad = Interval::point(9985.5);

}  // namespace

TEST_CASE("overshoot from damping ratio") {
  const Interval m = overshoot_from_xi(Interval::point(0.0539));
  CHECK(m.contains(Interval::point(m.midpoint())));
  CHECK(m.midpoint() == Approx(0.8440).margin(5e-4));
  CHECK(oracle::encloses(m, exact_overshoot(BigFloat(0.0539))));

  CHECK(overshoot_from_xi(Interval::point(1e-12)).hi() == Approx(1.0).margin(1e-9));

  const Interval box = overshoot_from_xi(Interval(0.043668, 0.065345));
  CHECK(box.lo() == Approx(0.8140).margin(1e-4));
  CHECK(box.hi() == Approx(0.8717).margin(1e-4));
  CHECK(oracle::encloses(box, exact_overshoot(BigFloat(0.065345))));
  CHECK(oracle::encloses(box, exact_overshoot(BigFloat(0.043668))));

  expect_error(ErrorCode::DomainViolation, [] { overshoot_from_xi(Interval(0.0, 0.5)); });
  expect_error(ErrorCode::DomainViolation, [] { overshoot_from_xi(Interval(0.5, 1.0)); });
}

TEST_CASE("peak, rise and settling times") {
  const Interval tp = peak_time(kNominalOmegad);
  CHECK(tp.midpoint() == Approx(0.000314).margin(1e-6));
  CHECK(oracle::encloses(tp, oracle::big_pi() / BigFloat(9985.5)));

  const Interval box_tp = peak_time(Interval(8685.2, 11773.9));
  CHECK(box_tp.lo() == Approx(2.6683e-4).margin(1e-8));
  CHECK(box_tp.hi() == Approx(3.6171e-4).margin(1e-8));
  CHECK(box_tp.contains(Interval(0.000267, 0.00036)));

  const Interval one = peak_time(pi_interval());
  CHECK(one.contains(1.0));
  CHECK(one.width() < 1e-15);
  expect_error(ErrorCode::DomainViolation, [] { peak_time(Interval(-1, 1)); });

  const Interval ta = settling_time(Interval::point(0.0539), Interval::point(10000));
  CHECK(oracle::encloses(ta, BigFloat(4) / (BigFloat(0.0539) * BigFloat(10000))));
  CHECK(ta.midpoint() == Approx(0.0074212).margin(1e-7));
  CHECK(settling_time(Interval::point(0.5), Interval::point(8)) == Interval::point(1.0));
  const Interval ta_box = settling_time(Interval(0.043668, 0.065345), Interval(8703.8, 11785.1));
  CHECK(oracle::encloses(ta_box, BigFloat(4) / (BigFloat(0.065345) * BigFloat(11785.1))));
  CHECK(oracle::encloses(ta_box, BigFloat(4) / (BigFloat(0.043668) * BigFloat(8703.8))));

  const Interval ts = rise_time(Interval::point(0.0539), kNominalOmegad);
  CHECK(ts.midpoint() == Approx(0.0001627).margin(1e-7));
  CHECK(oracle::encloses(
      ts, (oracle::big_pi() - boost::multiprecision::acos(BigFloat(0.0539))) / BigFloat(9985.5)));
  const Interval ts_box = rise_time(Interval(0.043668, 0.065345), Interval(8685.2, 11773.9));
  CHECK(ts_box.lo() == Approx(1.371e-4).margin(1e-7));
  CHECK(ts_box.hi() == Approx(1.884e-4).margin(1e-7));
  const Interval limit = rise_time(Interval::point(1e-15), Interval::point(1000));
  CHECK(limit.midpoint() == Approx(std::acos(-1.0) / 2 / 1000).epsilon(1e-12));
}

TEST_CASE("overshoot read from a band") {
  const CircuitSpec spec = fixtures::bench_circuit();
  const SecondOrderParams box = derive_params(spec);
  const Interval band_mp = overshoot_from_band(step_response_band(box, default_grid(box.nominal)));
  CHECK(band_mp.lo() == Approx(0.6656).margin(0.05));
  CHECK(band_mp.hi() == Approx(0.9230).margin(0.05));

  const SecondOrderParams point = derive_params(spec.nominal_only());
  const Interval thin =
      overshoot_from_band(step_response_band(point, default_grid(point.nominal)));
  CHECK(thin.lo() == Approx(0.8440).margin(5e-4));
  CHECK(thin.width() < 1e-12);

  ResponseBand monotone;
  monotone.t = {0.0, 1.0, 2.0};
  monotone.lower = {0.0, 0.5, 0.9};
  monotone.nominal = {0.0, 0.6, 0.95};
  monotone.upper = {0.0, 0.7, 1.01};
  CHECK(overshoot_from_band(monotone).lo() == 0.0);

  const ResponseBand short_band = step_response_band(point, uniform_grid(2e-4, 200));
  expect_error(ErrorCode::PeakNotCovered, [&] { overshoot_from_band(short_band); });
  expect_error(ErrorCode::PeakNotCovered, [] { overshoot_from_band(ResponseBand{}); });
}

TEST_CASE("spec bundles carry their pipeline") {
  const SecondOrderParams box = derive_params(fixtures::bench_circuit());
  const TransientSpecs p = specs_from_params(box);
  CHECK(p.pipeline == Pipeline::FromParams);
  CHECK(p.peak_time.contains(peak_time(box.omegad)));
  const TransientSpecs b = specs_from_band(step_response_band(box, default_grid(box.nominal)), box);
  CHECK(b.pipeline == Pipeline::FromBand);
  CHECK(b.overshoot.contains(p.overshoot));
  CHECK(to_string(Pipeline::FromTrace) == "FromTrace");
}

TEST_CASE("identification") {
  const double tp_exp = std::acos(-1.0) / 9951.196;
  const SecondOrderParams e = identify(Interval::point(0.7125), Interval::point(tp_exp));
  CHECK(e.xi.midpoint() == Approx(0.10729).margin(2e-4));
  CHECK(e.omegad.midpoint() == Approx(9951.2).margin(0.1));
  CHECK(e.omega0.midpoint() == Approx(10008.97).margin(0.5));
  CHECK(e.nominal.xi == e.xi.midpoint());

  const SecondOrderParams wide = identify(Interval(0.6656, 0.9230), Interval(2.67e-4, 3.6e-4));
  CHECK(wide.xi.lo() == Approx(0.02548).margin(2e-4));
  CHECK(wide.xi.hi() == Approx(0.12848).margin(2e-4));

  const SecondOrderParams n = identify(Interval::point(0.8440), Interval::point(0.000314));
  CHECK(n.xi.midpoint() == Approx(0.0539).margin(1e-4));
  CHECK(n.omegad.midpoint() == Approx(9985.5).margin(20));

  expect_error(ErrorCode::DomainViolation, [] { identify(Interval(0.0, 0.5), Interval::point(1)); });
  expect_error(ErrorCode::DomainViolation, [] { identify(Interval(0.5, 1.0), Interval::point(1)); });
  expect_error(ErrorCode::DomainViolation,
               [] { identify(Interval::point(0.5), Interval(-1e-3, 1e-3)); });
}

TEST_CASE("identification round trip contains the generating parameters") {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> xi_dist(0.01, 0.9);
  std::uniform_real_distribution<double> log_w(0.0, 6.0);
  int misses = 0;
  for (int i = 0; i < 1000; ++i) {
    const double xi = xi_dist(rng);
    const double wd = std::pow(10.0, log_w(rng));
    const SecondOrderParams p =
        identify(overshoot_from_xi(Interval::point(xi)), peak_time(Interval::point(wd)));
    if (!p.xi.contains(xi) || !p.omegad.contains(wd)) ++misses;
  }
  CHECK(misses == 0);
}

TEST_CASE("overshoot is antitone in damping") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> xi_dist(0.001, 0.999);
  for (int i = 0; i < 2000; ++i) {
    double a = xi_dist(rng), b = xi_dist(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    CHECK(overshoot_from_xi(Interval::point(a)).hi() > overshoot_from_xi(Interval::point(b)).lo());
  }
}

TEST_CASE("rise precedes peak precedes settling") {
  std::mt19937_64 rng(56);
  std::uniform_real_distribution<double> xi_dist(0.01, 0.6);
  std::uniform_real_distribution<double> log_w(0.0, 6.0);
  for (int i = 0; i < 2000; ++i) {
    const Interval xi = Interval::point(xi_dist(rng));
    const double w0 = std::pow(10.0, log_w(rng));
    const Interval omega0 = Interval::point(w0);
    const Interval omegad = omega0 * isqrt(Interval::point(1) - xi * xi);
    const double ts = rise_time(xi, omegad).midpoint();
    const double tp = peak_time(omegad).midpoint();
    const double ta = settling_time(xi, omega0).midpoint();
    CHECK(ts < tp);
    CHECK(tp < ta);
  }
}
