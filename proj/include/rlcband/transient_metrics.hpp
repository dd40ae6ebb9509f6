#pragma once

#include <string_view>

#include "rlcband/interval.hpp"
#include "rlcband/rlc_model.hpp"

namespace rlcband {

/// Where a set of transient specifications came from.
enum class Pipeline {
  FromParams,  // closed-form formulas over the parameter enclosures
  FromBand,    // overshoot read off a ResponseBand, timings from parameters
  FromTrace,   // measured on a normalized experimental trace
};

std::string_view to_string(Pipeline pipeline) noexcept;

/// Overshoot is a fraction of the final value (0.844, not 84.4%).
struct TransientSpecs {
  Interval overshoot = Interval::point(0.0);
  Interval rise_time = Interval::point(0.0);
  Interval peak_time = Interval::point(0.0);
  Interval settling_time = Interval::point(0.0);
  Pipeline pipeline = Pipeline::FromParams;
};

/// exp(-pi xi / sqrt(1 - xi^2)); xi must lie strictly inside (0, 1).
Interval overshoot_from_xi(const Interval& xi);
/// pi / omegad.
Interval peak_time(const Interval& omegad);
/// 4 / (xi omega0), the 2% settling time.
Interval settling_time(const Interval& xi, const Interval& omega0);
/// First crossing of the final value, (pi - acos xi) / omegad.
Interval rise_time(const Interval& xi, const Interval& omegad);

/// [max lower - 1, max upper - 1], both clamped at zero. Throws
/// PeakNotCovered if the band carries a peak time and its grid ends before
/// 1.2 times it.
Interval overshoot_from_band(const ResponseBand& band);

TransientSpecs specs_from_params(const SecondOrderParams& params);
TransientSpecs specs_from_band(const ResponseBand& band, const SecondOrderParams& params);

/// Inverts the overshoot and peak-time formulas:
///   L = ln(overshoot),  xi = 1 / sqrt(1 + pi^2 / L^2),
///   omegad = pi / peak_time,  omega0 = omegad / sqrt(1 - xi^2).
/// The nominal triple is the midpoint of each enclosure.
SecondOrderParams identify(const Interval& overshoot, const Interval& peak_time);

}  // namespace rlcband
