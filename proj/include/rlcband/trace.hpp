#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rlcband/rlc_model.hpp"
#include "rlcband/transient_metrics.hpp"

namespace rlcband {

struct Sample {
  double t = 0.0;  // seconds
  double v = 0.0;  // volts, or unit-step normalized after normalize()
};

inline constexpr std::size_t kMinTraceSamples = 50;

/// Experimental step-response capture.
class Trace {
 public:
  /// Throws NonFinite, NonMonotoneTime or TooFewSamples.
  Trace(std::vector<Sample> samples, std::string label = {});

  const std::vector<Sample>& samples() const noexcept { return samples_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return samples_.size(); }

 private:
  std::vector<Sample> samples_;
  std::string label_;
};

/// CSV with header `t,v`. Errors carry the 1-based line number.
Trace parse_trace(std::istream& in, const std::string& label = {});
Trace load_trace(const std::filesystem::path& path);
void write_trace_csv(std::ostream& out, const Trace& trace);

struct NormalizeOptions {
  /// The step is located at the first sample deviating from the initial
  /// level by more than this fraction of the trace range.
  double onset_threshold = 0.10;
  /// Fraction of samples at the end of the trace used as the steady state.
  double steady_window = 0.10;
  /// The steady window's standard deviation must stay below this fraction of
  /// its mean.
  double max_steady_spread = 0.05;
};

/// Rescales to v' = (v - baseline) / (steady - baseline) and shifts time so
/// the step onset is t = 0.
///
/// The baseline is the mean of the pre-step samples. The samples before the
/// threshold crossing also contain the slow start of the rise, so the onset
/// is placed where "flat, then quadratic from rest" best fits them in the
/// least-squares sense; only samples up to that onset enter the baseline.
/// Throws NoStepDetected or NotSettled.
Trace normalize(const Trace& trace, const NormalizeOptions& options = {});

/// Measured specifications on a normalized trace (degenerate intervals,
/// pipeline FromTrace):
///   overshoot = max v - 1,
///   peak time = time of max v, refined to the vertex of the parabola through
///     the maximum and its two neighbours (never more than half a sample away),
///   rise time = first linearly interpolated crossing of v = 1,
///   settling time = time after which |v - 1| <= 0.02 for good.
/// Throws OverdampedTrace when the overshoot is below 0.01.
TransientSpecs measure_specs(const Trace& normalized);

struct SampleVerdict {
  double t = 0.0;
  double v = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool inside = false;
};

struct Violation {
  double t = 0.0;
  /// Distance outside the band, in units of the local band width.
  double band_widths = 0.0;
};

struct EnclosureReport {
  std::size_t total = 0;
  std::size_t inside = 0;
  /// Samples outside the band's time range; not part of `total`.
  std::size_t skipped = 0;
  double fraction_inside = 0.0;
  std::optional<Violation> worst;
  std::vector<SampleVerdict> verdicts;
};

inline constexpr double kEnclosureSlack = 1e-9;

/// Band bounds are linearly interpolated at each sample time and, when the
/// band carries a curvature bound M, widened by the interpolation error bound
/// M/2 (t - t_i)(t_{i+1} - t), which is zero at grid times. A sample is
/// inside iff lower - slack <= v <= upper + slack. Throws TimeRangeMismatch if
/// no sample falls within the band's time range.
EnclosureReport check_enclosure(const Trace& normalized, const ResponseBand& band,
                                double slack = kEnclosureSlack);

/// CSV `t,v,lower,upper,inside`.
void write_verdicts_csv(std::ostream& out, const EnclosureReport& report);

}  // namespace rlcband
