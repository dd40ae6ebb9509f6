#pragma once

// Shared expectations for the bench circuit and an independent long-double
// closed-form generator for synthetic traces.

#include <cmath>
#include <string>
#include <vector>

#include "rlcband/rlc_model.hpp"
#include "rlcband/trace.hpp"

namespace fixtures {

inline rlcband::CircuitSpec bench_circuit() {
  return rlcband::CircuitSpec{{100.0, 0.05}, {0.1, 0.10}, {100e-9, 0.20}, {7.8, 0.05}};
}

/// Point circuit parameters, independent of rlcband's own derivation.
struct Rlc {
  long double r, l, c;

  long double xi() const { return r / 2 * std::sqrt(c / l); }
  long double omega0() const { return 1 / std::sqrt(l * c); }
  long double omegad() const { return omega0() * std::sqrt(1 - xi() * xi()); }
};

inline Rlc from_spec(const rlcband::CircuitSpec& s) {
  return {static_cast<long double>(s.resistor.nominal) + s.inductor_resistance.nominal,
          s.inductance.nominal, s.capacitance.nominal};
}

/// Unit-step capacitor voltage of an underdamped series RLC from rest.
inline long double step_response(long double xi, long double omega0, long double t) {
  if (t <= 0) return 0;
  const long double s = std::sqrt(1 - xi * xi);
  const long double wd = omega0 * s;
  return 1 - std::exp(-xi * omega0 * t) * (std::cos(wd * t) + xi / s * std::sin(wd * t));
}

struct SynthOptions {
  double dt = 1e-6;
  double t_end = 0.0;        // response duration after the step
  double pre_trigger = 0.0;  // flat samples before the step
  double gain = 1.0;
  double offset = 0.0;
};

/// Samples gain * v(t - pre_trigger) + offset on a uniform grid from 0.
inline rlcband::Trace synth_trace(long double xi, long double omega0, const SynthOptions& o,
                                  const std::string& label = "synthetic") {
  std::vector<rlcband::Sample> samples;
  const auto n = static_cast<std::size_t>(std::llround((o.pre_trigger + o.t_end) / o.dt)) + 1;
  const auto pre = static_cast<long>(std::llround(o.pre_trigger / o.dt));
  samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long double t = static_cast<long double>(static_cast<long>(i) - pre) * o.dt;
    const double v = static_cast<double>(o.gain * step_response(xi, omega0, t) + o.offset);
    samples.push_back({static_cast<double>(i) * o.dt, v});
  }
  return rlcband::Trace(std::move(samples), label);
}

}  // namespace fixtures
