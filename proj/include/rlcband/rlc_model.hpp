#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rlcband/interval.hpp"

namespace rlcband {

/// One toleranced part: nominal value and relative tolerance (0.05 == 5%).
struct Component {
  double nominal = 0.0;
  double tol_fraction = 0.0;

  Interval interval() const { return from_nominal_tolerance(nominal, tol_fraction); }
};

/// Series RLC driven by a unit step, output across the capacitor.
///
/// The inductor's winding resistance is its own toleranced part; the loop
/// resistance is resistor + inductor_resistance.
struct CircuitSpec {
  Component resistor;             // ohms
  Component inductance;           // henries
  Component capacitance;          // farads
  Component inductor_resistance;  // ohms

  /// Throws InvalidSpec unless every nominal is positive and finite and every
  /// tolerance lies in [0, 1).
  void validate() const;

  double nominal_resistance() const noexcept {
    return resistor.nominal + inductor_resistance.nominal;
  }
  Interval total_resistance() const {
    return resistor.interval() + inductor_resistance.interval();
  }

  /// Same circuit with every tolerance set to zero.
  CircuitSpec nominal_only() const;
};

/// Point-valued damping ratio and natural / damped frequencies (rad/s).
struct NominalParams {
  double xi = 0.0;
  double omega0 = 0.0;
  double omegad = 0.0;
};

struct SecondOrderParams {
  Interval xi = Interval::point(0.0);
  Interval omega0 = Interval::point(0.0);
  Interval omegad = Interval::point(0.0);
  NominalParams nominal;
};

/// Interval parameters of the component box plus the nominal triple.
///
///   xi     = (R / 2) sqrt(C / L)
///   omega0 = 1 / sqrt(L C)
///   omegad = omega0 sqrt(1 - xi^2)
///
/// Throws NotUnderdamped unless the xi enclosure lies strictly inside (0, 1).
SecondOrderParams derive_params(const CircuitSpec& spec);

/// Nominal triple in plain double arithmetic; throws NotUnderdamped if xi >= 1.
NominalParams nominal_params(const CircuitSpec& spec);

/// Closed-form unit-step response
///   v(t) = 1 - exp(-xi w0 t) (cos(wd t) + xi / sqrt(1 - xi^2) sin(wd t)).
double step_response_point(const NominalParams& params, double t);

/// The same expression in interval arithmetic with t exact.
Interval step_response_enclosure(const SecondOrderParams& params, double t);

/// 2% settling time 4 / (xi w0) of the nominal triple.
double nominal_settling_time(const NominalParams& params) noexcept;

/// `points` uniform times on [0, t_end], t[0] = 0 and t.back() = t_end.
std::vector<double> uniform_grid(double t_end, std::size_t points);

inline constexpr std::size_t kDefaultGridPoints = 2000;
inline constexpr double kDefaultTEndMultiplier = 5.0;

/// Uniform grid over [0, t_end_multiplier * (nominal settling time)].
std::vector<double> default_grid(const NominalParams& params,
                                 std::size_t points = kDefaultGridPoints,
                                 double t_end_multiplier = kDefaultTEndMultiplier);

struct ResponseBand {
  std::vector<double> t;
  std::vector<double> lower;
  std::vector<double> nominal;
  std::vector<double> upper;
  /// Nominal first-peak time when the band was built from parameters.
  std::optional<double> peak_time;
  /// Per segment [t[i], t[i+1]]: an upper bound on |v''| over the segment for
  /// every parameter point in the enclosure. Lets a consumer bound the error
  /// of linearly interpolating lower / upper. Empty for hand-built bands.
  std::vector<double> curvature_bound;

  std::size_t size() const noexcept { return t.size(); }
};

/// Guaranteed band: at each grid time the closed form is enclosed in interval
/// arithmetic; nominal comes from step_response_point. Grid must start at 0
/// and be strictly increasing (InvalidSpec otherwise).
///
/// The curvature bound uses v'' = (w0^2 / wd) e^(-xi w0 t) (wd cos - xi w0 sin),
/// so |v''| <= w0^3 / wd * e^(-xi w0 t), largest at the segment start.
ResponseBand step_response_band(const SecondOrderParams& params, std::span<const double> grid);

struct Trajectory {
  std::vector<double> t;
  std::vector<double> v;
};

/// Fixed-step RK4 integration of the two-state circuit equations
///   L di/dt = 1 - R i - v,   C dv/dt = i
/// from rest at the nominal component values. Throws StepSizeRejected when
/// dt > t_end / 100 or dt * omega0 > 0.1.
Trajectory simulate_ode_point(const CircuitSpec& spec, double t_end, double dt);

}  // namespace rlcband
