#include "rlcband/trace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>

#include "rlcband/error.hpp"
#include "rlcband/format.hpp"

namespace rlcband {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_field(const std::string& text, double& out) {
  const std::string field = trim(text);
  if (field.empty()) return false;
  char* end = nullptr;
  out = std::strtod(field.c_str(), &end);
  return end == field.c_str() + field.size();
}

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
};

Stats stats(const std::vector<Sample>& s, std::size_t begin, std::size_t end) {
  const auto n = static_cast<double>(end - begin);
  double sum = 0.0;
  for (std::size_t i = begin; i < end; ++i) sum += s[i].v;
  Stats out;
  out.mean = sum / n;
  double sq = 0.0;
  for (std::size_t i = begin; i < end; ++i) sq += (s[i].v - out.mean) * (s[i].v - out.mean);
  out.stddev = std::sqrt(sq / n);
  return out;
}

double lerp_time(const Sample& a, const Sample& b, double level) {
  if (b.v == a.v) return a.t;
  return a.t + (level - a.v) * (b.t - a.t) / (b.v - a.v);
}

// The capacitor voltage leaves rest with zero slope, so just after the onset
// it rises like a (t - t_k)^2. Every candidate onset k before the threshold
// crossing is scored by the least-squares residual of "flat at the mean of
// samples 0..k, then that parabola up to the crossing"; the best k wins. This
// stays within a sample of the true onset even when noise hides the first
// microseconds of the rise, and needs no pre-trigger segment at all.
std::size_t locate_onset(const std::vector<Sample>& s, std::size_t crossing) {
  constexpr std::size_t kMaxRiseSamples = 4096;
  std::vector<double> sum(crossing + 2, 0.0);
  std::vector<double> sum_sq(crossing + 2, 0.0);
  for (std::size_t i = 0; i <= crossing; ++i) {
    sum[i + 1] = sum[i] + s[i].v;
    sum_sq[i + 1] = sum_sq[i] + s[i].v * s[i].v;
  }
  const std::size_t first = crossing > kMaxRiseSamples ? crossing - kMaxRiseSamples : 0;
  std::size_t best = first;
  double best_sse = std::numeric_limits<double>::infinity();
  for (std::size_t k = first; k < crossing; ++k) {
    const double n_flat = static_cast<double>(k + 1);
    const double rest = sum[k + 1] / n_flat;
    const double flat_sse = std::max(0.0, sum_sq[k + 1] - n_flat * rest * rest);
    double dv_tau2 = 0.0;
    double tau4 = 0.0;
    double dv2 = 0.0;
    for (std::size_t i = k + 1; i <= crossing; ++i) {
      const double tau = s[i].t - s[k].t;
      const double dv = s[i].v - rest;
      dv_tau2 += dv * tau * tau;
      tau4 += tau * tau * tau * tau;
      dv2 += dv * dv;
    }
    const double rise_sse = tau4 > 0.0 ? dv2 - dv_tau2 * dv_tau2 / tau4 : dv2;
    const double sse = flat_sse + rise_sse;
    if (sse < best_sse) {
      best_sse = sse;
      best = k;
    }
  }
  return best;
}

// Vertex of the parabola through the argmax and its neighbours, kept within
// half a sample of the argmax so noise cannot move it further.
double refine_peak(const std::vector<Sample>& s, std::size_t i) {
  if (i == 0 || i + 1 == s.size()) return s[i].t;
  const Sample& a = s[i - 1];
  const Sample& b = s[i];
  const Sample& c = s[i + 1];
  const double left = b.t - a.t;
  const double right = c.t - b.t;
  const double slope_l = (b.v - a.v) / left;
  const double slope_r = (c.v - b.v) / right;
  const double curvature = (slope_r - slope_l) / (0.5 * (left + right));
  if (!(curvature < 0.0)) return b.t;
  const double offset = -0.5 * (slope_l + slope_r) / curvature + 0.25 * (right - left);
  return b.t + std::clamp(offset, -0.5 * left, 0.5 * right);
}

}  // namespace

Trace::Trace(std::vector<Sample> samples, std::string label)
    : samples_(std::move(samples)), label_(std::move(label)) {
  if (samples_.size() < kMinTraceSamples) {
    throw Error(ErrorCode::TooFewSamples, "trace has " + std::to_string(samples_.size()) +
                                              " samples, need at least " +
                                              std::to_string(kMinTraceSamples));
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i].t) || !std::isfinite(samples_[i].v)) {
      throw Error(ErrorCode::NonFinite, "sample " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(samples_[i].t > samples_[i - 1].t)) {
      throw Error(ErrorCode::NonMonotoneTime,
                  "time does not increase at sample " + std::to_string(i) + " (t = " +
                      format_real(samples_[i].t) + ")");
    }
  }
}

Trace parse_trace(std::istream& in, const std::string& label) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<Sample> samples;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!header_seen) {
      std::string compact;
      std::copy_if(text.begin(), text.end(), std::back_inserter(compact),
                   [](char ch) { return ch != ' ' && ch != '\t'; });
      if (compact != "t,v") {
        throw Error(ErrorCode::MalformedRow,
                    "line " + std::to_string(line_no) + ": expected header 't,v'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = text.find(',');
    Sample s;
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos ||
        !parse_field(text.substr(0, comma), s.t) || !parse_field(text.substr(comma + 1), s.v)) {
      throw Error(ErrorCode::MalformedRow,
                  "line " + std::to_string(line_no) + ": expected two numeric fields, got '" +
                      text + "'");
    }
    samples.push_back(s);
  }
  if (!header_seen) {
    throw Error(ErrorCode::MalformedRow, "missing header 't,v'");
  }
  return Trace(std::move(samples), label);
}

Trace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open trace '" + path.string() + "'");
  }
  return parse_trace(in, path.filename().string());
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
  out << "t,v\n";
  for (const Sample& s : trace.samples()) {
    out << format_real(s.t) << ',' << format_real(s.v) << '\n';
  }
}

Trace normalize(const Trace& trace, const NormalizeOptions& options) {
  const auto& s = trace.samples();
  const std::size_t n = s.size();
  const auto [min_it, max_it] =
      std::minmax_element(s.begin(), s.end(), [](auto& a, auto& b) { return a.v < b.v; });
  const double range = max_it->v - min_it->v;
  if (!(range > 0.0)) {
    throw Error(ErrorCode::NoStepDetected, "trace is constant");
  }

  const double initial = s.front().v;
  std::size_t crossing = 0;
  while (crossing < n && std::fabs(s[crossing].v - initial) <= options.onset_threshold * range) {
    ++crossing;
  }
  if (crossing == n) {
    throw Error(ErrorCode::NoStepDetected, "no sample departs from the initial level by " +
                                               format_real(100 * options.onset_threshold, 4) +
                                               "% of range");
  }

  const std::size_t onset = locate_onset(s, crossing);
  const double baseline = stats(s, 0, onset + 1).mean;

  const auto window = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(options.steady_window * static_cast<double>(n))));
  const Stats steady = stats(s, n - window, n);
  if (!(steady.stddev < options.max_steady_spread * std::fabs(steady.mean))) {
    throw Error(ErrorCode::NotSettled, "final " + std::to_string(window) +
                                           " samples spread " + format_real(steady.stddev, 4) +
                                           " around mean " + format_real(steady.mean, 4));
  }
  const double step = steady.mean - baseline;
  if (step == 0.0) {
    throw Error(ErrorCode::NoStepDetected, "steady state equals baseline");
  }

  const double t0 = s[onset].t;
  std::vector<Sample> out;
  out.reserve(n);
  for (const Sample& x : s) out.push_back({x.t - t0, (x.v - baseline) / step});
  return Trace(std::move(out), trace.label());
}

TransientSpecs measure_specs(const Trace& normalized) {
  const auto& s = normalized.samples();
  const auto peak = std::max_element(s.begin(), s.end(), [](auto& a, auto& b) { return a.v < b.v; });
  const Interval overshoot = Interval::point(peak->v) - Interval::point(1.0);
  if (overshoot.hi() < 0.01) {
    throw Error(ErrorCode::OverdampedTrace, "overshoot " + format_real(overshoot.hi(), 4) +
                                                " below 0.01; not an underdamped response");
  }

  double rise = peak->t;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].v >= 1.0 && s[i - 1].v < 1.0) {
      rise = lerp_time(s[i - 1], s[i], 1.0);
      break;
    }
  }

  // Last sample outside the 2% band; settling is where it re-enters.
  std::size_t last_out = s.size();
  for (std::size_t i = s.size(); i-- > 0;) {
    if (std::fabs(s[i].v - 1.0) > 0.02) {
      last_out = i;
      break;
    }
  }
  if (last_out + 1 == s.size()) {
    throw Error(ErrorCode::NotSettled, "trace ends outside the 2% band");
  }
  double settle = s.front().t;
  if (last_out < s.size()) {
    const Sample& a = s[last_out];
    settle = lerp_time(a, s[last_out + 1], a.v > 1.0 ? 1.02 : 0.98);
  }

  TransientSpecs specs;
  specs.overshoot = Interval(std::max(overshoot.lo(), 0.0), overshoot.hi());
  specs.rise_time = Interval::point(rise);
  specs.peak_time = Interval::point(refine_peak(s, static_cast<std::size_t>(peak - s.begin())));
  specs.settling_time = Interval::point(settle);
  specs.pipeline = Pipeline::FromTrace;
  return specs;
}

EnclosureReport check_enclosure(const Trace& normalized, const ResponseBand& band, double slack) {
  if (band.size() < 2) {
    throw Error(ErrorCode::TimeRangeMismatch, "band has fewer than two grid points");
  }
  EnclosureReport report;
  for (const Sample& x : normalized.samples()) {
    if (x.t < band.t.front() || x.t > band.t.back()) {
      ++report.skipped;
      continue;
    }
    const auto it = std::upper_bound(band.t.begin(), band.t.end(), x.t);
    const std::size_t hi = std::min<std::size_t>(it - band.t.begin(), band.size() - 1);
    const std::size_t lo = hi - 1;
    const double w = (x.t - band.t[lo]) / (band.t[hi] - band.t[lo]);
    SampleVerdict v;
    v.t = x.t;
    v.v = x.v;
    // |f - chord| <= M/2 (t - t_lo)(t_hi - t) for |f''| <= M on the segment.
    const double margin =
        band.curvature_bound.size() + 1 == band.size()
            ? 0.5 * band.curvature_bound[lo] * (x.t - band.t[lo]) * (band.t[hi] - x.t)
            : 0.0;
    v.lower = band.lower[lo] + w * (band.lower[hi] - band.lower[lo]) - margin;
    v.upper = band.upper[lo] + w * (band.upper[hi] - band.upper[lo]) + margin;
    v.inside = v.lower - slack <= x.v && x.v <= v.upper + slack;
    ++report.total;
    if (v.inside) {
      ++report.inside;
    } else {
      const double excess = x.v < v.lower ? v.lower - x.v : x.v - v.upper;
      const double distance = excess / std::max(v.upper - v.lower, slack);
      if (!report.worst || distance > report.worst->band_widths) {
        report.worst = Violation{x.t, distance};
      }
    }
    report.verdicts.push_back(v);
  }
  if (report.total == 0) {
    throw Error(ErrorCode::TimeRangeMismatch,
                "trace time range does not overlap band [0, " + format_real(band.t.back(), 6) + "]");
  }
  report.fraction_inside = static_cast<double>(report.inside) / static_cast<double>(report.total);
  return report;
}

void write_verdicts_csv(std::ostream& out, const EnclosureReport& report) {
  out << "t,v,lower,upper,inside\n";
  for (const SampleVerdict& v : report.verdicts) {
    out << format_real(v.t) << ',' << format_real(v.v) << ',' << format_real(v.lower) << ','
        << format_real(v.upper) << ',' << (v.inside ? 1 : 0) << '\n';
  }
}

}  // namespace rlcband
