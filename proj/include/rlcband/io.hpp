#pragma once

#include <filesystem>
#include <iosfwd>

#include "rlcband/rlc_model.hpp"

namespace rlcband {

/// Reads a circuit description of `key = value` lines (`#` starts a comment):
///
///   r_ohms = 100
///   r_tol_pct = 5
///   rl_ohms = 7.8
///   ...
///   c_farads = 100e-9
///   c_tol_pct = 20
///
/// All eight keys are required, one per line; unknown or repeated keys are
/// Config errors.
CircuitSpec parse_circuit_spec(std::istream& in);
CircuitSpec load_circuit_spec(const std::filesystem::path& path);
void write_circuit_spec(std::ostream& out, const CircuitSpec& spec);

/// `t,lower,nominal,upper` with 17 significant digits.
void write_band_csv(std::ostream& out, const ResponseBand& band);
/// `t,v` nominal trajectory; readable back as a trace.
void write_nominal_csv(std::ostream& out, const ResponseBand& band);

}  // namespace rlcband
