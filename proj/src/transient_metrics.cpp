#include "rlcband/transient_metrics.hpp"

#include <algorithm>

#include "rlcband/elementary.hpp"
#include "rlcband/error.hpp"
#include "rlcband/format.hpp"

namespace rlcband {
namespace {

const Interval kOne = Interval::point(1.0);

void require_damping_ratio(const Interval& xi) {
  if (!(xi.lo() > 0.0 && xi.hi() < 1.0)) {
    throw Error(ErrorCode::DomainViolation,
                "damping ratio " + to_string(xi, 6) + " must lie strictly inside (0, 1)");
  }
}

void require_positive(const Interval& x, const char* what) {
  if (!(x.lo() > 0.0)) {
    throw Error(ErrorCode::DomainViolation,
                std::string(what) + " " + to_string(x, 6) + " must be positive");
  }
}

}  // namespace

std::string_view to_string(Pipeline pipeline) noexcept {
  switch (pipeline) {
    case Pipeline::FromParams: return "FromParams";
    case Pipeline::FromBand: return "FromBand";
    case Pipeline::FromTrace: return "FromTrace";
  }
  return "Unknown";
}

Interval overshoot_from_xi(const Interval& xi) {
  require_damping_ratio(xi);
  // Numerator rises and denominator falls with xi, so this extension is exact
  // up to rounding despite xi appearing twice.
  return iexp(-(pi_interval() * xi / isqrt(kOne - xi * xi)));
}

Interval peak_time(const Interval& omegad) {
  require_positive(omegad, "damped frequency");
  return pi_interval() / omegad;
}

Interval settling_time(const Interval& xi, const Interval& omega0) {
  const Interval rate = xi * omega0;
  require_positive(rate, "decay rate xi * omega0");
  return Interval::point(4.0) / rate;
}

Interval rise_time(const Interval& xi, const Interval& omegad) {
  require_damping_ratio(xi);
  require_positive(omegad, "damped frequency");
  return (pi_interval() - iacos(xi)) / omegad;
}

Interval overshoot_from_band(const ResponseBand& band) {
  if (band.size() == 0) {
    throw Error(ErrorCode::PeakNotCovered, "empty band");
  }
  if (band.peak_time && band.t.back() < 1.2 * *band.peak_time) {
    throw Error(ErrorCode::PeakNotCovered,
                "band ends at t = " + format_real(band.t.back(), 6) +
                    " before 1.2 x peak time " + format_real(*band.peak_time, 6));
  }
  const double max_lower = *std::max_element(band.lower.begin(), band.lower.end());
  const double max_upper = *std::max_element(band.upper.begin(), band.upper.end());
  const Interval excess = Interval(max_lower, max_upper) - kOne;
  return Interval(std::max(excess.lo(), 0.0), std::max(excess.hi(), 0.0));
}

TransientSpecs specs_from_params(const SecondOrderParams& p) {
  TransientSpecs s;
  s.overshoot = overshoot_from_xi(p.xi);
  s.rise_time = rise_time(p.xi, p.omegad);
  s.peak_time = peak_time(p.omegad);
  s.settling_time = settling_time(p.xi, p.omega0);
  s.pipeline = Pipeline::FromParams;
  return s;
}

TransientSpecs specs_from_band(const ResponseBand& band, const SecondOrderParams& p) {
  TransientSpecs s = specs_from_params(p);
  s.overshoot = overshoot_from_band(band);
  s.pipeline = Pipeline::FromBand;
  return s;
}

SecondOrderParams identify(const Interval& overshoot, const Interval& peak) {
  if (!(overshoot.lo() > 0.0 && overshoot.hi() < 1.0)) {
    throw Error(ErrorCode::DomainViolation,
                "overshoot " + to_string(overshoot, 6) + " must lie strictly inside (0, 1)");
  }
  require_positive(peak, "peak time");

  const Interval pi = pi_interval();
  const Interval log_mp = iln(overshoot);
  // log_mp < 0, so log_mp * log_mp is the exact square range and xi uses
  // log_mp only once: no dependency widening.
  const Interval xi = kOne / isqrt(kOne + pi * pi / (log_mp * log_mp));

  const Interval damping_factor = kOne - xi * xi;
  if (!(damping_factor.lo() > 0.0)) {
    throw Error(ErrorCode::DomainViolation,
                "overshoot " + to_string(overshoot, 6) + " too small to separate xi from 1");
  }

  SecondOrderParams p;
  p.xi = xi;
  p.omegad = pi / peak;
  p.omega0 = p.omegad / isqrt(damping_factor);
  p.nominal = {p.xi.midpoint(), p.omega0.midpoint(), p.omegad.midpoint()};
  return p;
}

}  // namespace rlcband
