#include "rlcband/rlc_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "rlcband/elementary.hpp"
#include "rlcband/error.hpp"
#include "rlcband/format.hpp"

namespace rlcband {
namespace {

void validate_component(const Component& c, const char* name) {
  if (!std::isfinite(c.nominal) || c.nominal <= 0.0) {
    throw Error(ErrorCode::InvalidSpec,
                std::string(name) + " nominal must be positive, got " + format_real(c.nominal));
  }
  if (!std::isfinite(c.tol_fraction) || c.tol_fraction < 0.0 || c.tol_fraction >= 1.0) {
    throw Error(ErrorCode::InvalidSpec, std::string(name) + " tolerance must lie in [0, 1), got " +
                                            format_real(c.tol_fraction));
  }
}

}  // namespace

void CircuitSpec::validate() const {
  validate_component(resistor, "resistor");
  validate_component(inductance, "inductance");
  validate_component(capacitance, "capacitance");
  validate_component(inductor_resistance, "inductor resistance");
}

CircuitSpec CircuitSpec::nominal_only() const {
  CircuitSpec out = *this;
  out.resistor.tol_fraction = 0.0;
  out.inductance.tol_fraction = 0.0;
  out.capacitance.tol_fraction = 0.0;
  out.inductor_resistance.tol_fraction = 0.0;
  return out;
}

NominalParams nominal_params(const CircuitSpec& spec) {
  spec.validate();
  const double r = spec.nominal_resistance();
  const double l = spec.inductance.nominal;
  const double c = spec.capacitance.nominal;
  NominalParams p;
  p.xi = 0.5 * r * std::sqrt(c / l);
  p.omega0 = 1.0 / std::sqrt(l * c);
  if (!(p.xi > 0.0 && p.xi < 1.0)) {
    throw Error(ErrorCode::NotUnderdamped, "nominal damping ratio " + format_real(p.xi, 6) +
                                               " is not in (0, 1)");
  }
  p.omegad = p.omega0 * std::sqrt(1.0 - p.xi * p.xi);
  return p;
}

SecondOrderParams derive_params(const CircuitSpec& spec) {
  spec.validate();
  const Interval r = spec.total_resistance();
  const Interval l = spec.inductance.interval();
  const Interval c = spec.capacitance.interval();
  const Interval one = Interval::point(1.0);

  SecondOrderParams p;
  p.xi = r / Interval::point(2.0) * isqrt(c / l);
  if (!(p.xi.lo() > 0.0 && p.xi.hi() < 1.0)) {
    throw Error(ErrorCode::NotUnderdamped,
                "damping ratio enclosure " + to_string(p.xi, 6) + " is not inside (0, 1)");
  }
  p.omega0 = one / isqrt(l * c);
  p.omegad = p.omega0 * isqrt(one - p.xi * p.xi);
  p.nominal = nominal_params(spec);
  return p;
}

double step_response_point(const NominalParams& p, double t) {
  const double decay = std::exp(-p.xi * p.omega0 * t);
  const double k = p.xi / std::sqrt(1.0 - p.xi * p.xi);
  const double phase = p.omegad * t;
  return 1.0 - decay * (std::cos(phase) + k * std::sin(phase));
}

Interval step_response_enclosure(const SecondOrderParams& p, double t) {
  const Interval one = Interval::point(1.0);
  const Interval time = Interval::point(t);
  const Interval decay = iexp(-(p.xi * p.omega0 * time));
  const Interval k = p.xi / isqrt(one - p.xi * p.xi);
  const Interval phase = p.omegad * time;
  return one - decay * (icos(phase) + k * isin(phase));
}

double nominal_settling_time(const NominalParams& p) noexcept {
  return 4.0 / (p.xi * p.omega0);
}

std::vector<double> uniform_grid(double t_end, std::size_t points) {
  if (points < 2 || !std::isfinite(t_end) || t_end <= 0.0) {
    throw Error(ErrorCode::InvalidSpec, "grid needs >= 2 points and a positive end time");
  }
  std::vector<double> grid(points);
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = t_end * (static_cast<double>(i) / last);
  }
  grid.back() = t_end;
  return grid;
}

std::vector<double> default_grid(const NominalParams& params, std::size_t points,
                                 double t_end_multiplier) {
  return uniform_grid(t_end_multiplier * nominal_settling_time(params), points);
}

ResponseBand step_response_band(const SecondOrderParams& params, std::span<const double> grid) {
  if (grid.empty() || grid.front() != 0.0) {
    throw Error(ErrorCode::InvalidSpec, "band grid must start at t = 0");
  }
  if (std::adjacent_find(grid.begin(), grid.end(), std::greater_equal<>()) != grid.end()) {
    throw Error(ErrorCode::InvalidSpec, "band grid must be strictly increasing");
  }

  ResponseBand band;
  band.t.assign(grid.begin(), grid.end());
  band.lower.reserve(grid.size());
  band.nominal.reserve(grid.size());
  band.upper.reserve(grid.size());
  for (double t : grid) {
    const Interval v = step_response_enclosure(params, t);
    const double nominal = step_response_point(params.nominal, t);
    // The nominal is a rounded double; hulling keeps lower <= nominal <= upper.
    band.lower.push_back(std::min(v.lo(), nominal));
    band.nominal.push_back(nominal);
    band.upper.push_back(std::max(v.hi(), nominal));
  }
  const Interval& w0 = params.omega0;
  const Interval scale = w0 * w0 * w0 / params.omegad;
  band.curvature_bound.reserve(grid.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const Interval decay = iexp(-(params.xi * w0 * Interval::point(grid[i])));
    band.curvature_bound.push_back((scale * decay).hi());
  }
  band.peak_time = std::acos(-1.0) / params.nominal.omegad;
  return band;
}

Trajectory simulate_ode_point(const CircuitSpec& spec, double t_end, double dt) {
  spec.validate();
  if (!(dt > 0.0) || !(t_end > 0.0) || dt > t_end / 100.0) {
    throw Error(ErrorCode::StepSizeRejected,
                "dt must be positive and at most t_end / 100 (dt = " + format_real(dt, 6) +
                    ", t_end = " + format_real(t_end, 6) + ")");
  }
  const double r = spec.nominal_resistance();
  const double l = spec.inductance.nominal;
  const double c = spec.capacitance.nominal;
  const double omega0 = 1.0 / std::sqrt(l * c);
  if (dt * omega0 > 0.1) {
    throw Error(ErrorCode::StepSizeRejected,
                "dt * omega0 = " + format_real(dt * omega0, 6) + " exceeds 0.1");
  }

  // State: {v_C, i}.
  using State = std::array<double, 2>;
  const auto deriv = [&](const State& s) -> State {
    return {s[1] / c, (1.0 - r * s[1] - s[0]) / l};
  };
  const auto axpy = [](const State& x, double a, const State& y) -> State {
    return {x[0] + a * y[0], x[1] + a * y[1]};
  };

  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt));
  const double h = t_end / static_cast<double>(steps);

  Trajectory out;
  out.t.reserve(steps + 1);
  out.v.reserve(steps + 1);
  State s{0.0, 0.0};
  out.t.push_back(0.0);
  out.v.push_back(s[0]);
  for (std::size_t n = 1; n <= steps; ++n) {
    const State k1 = deriv(s);
    const State k2 = deriv(axpy(s, h / 2, k1));
    const State k3 = deriv(axpy(s, h / 2, k2));
    const State k4 = deriv(axpy(s, h, k3));
    for (std::size_t j = 0; j < 2; ++j) {
      s[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
    }
    out.t.push_back(h * static_cast<double>(n));
    out.v.push_back(s[0]);
  }
  return out;
}

}  // namespace rlcband
