#include "rlcband/io.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "rlcband/error.hpp"
#include "rlcband/format.hpp"

namespace rlcband {
namespace {

constexpr std::array<const char*, 8> kKeys = {
    "r_ohms", "r_tol_pct", "rl_ohms", "rl_tol_pct",
    "l_henries", "l_tol_pct", "c_farads", "c_tol_pct",
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool known_key(const std::string& key) {
  for (const char* k : kKeys) {
    if (key == k) return true;
  }
  return false;
}

}  // namespace

CircuitSpec parse_circuit_spec(std::istream& in) {
  std::map<std::string, double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string text = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) {
      throw Error(ErrorCode::Config, where + "expected 'key = value'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string raw = trim(text.substr(eq + 1));
    if (!known_key(key)) {
      throw Error(ErrorCode::Config, where + "unknown key '" + key + "'");
    }
    if (values.count(key) != 0) {
      throw Error(ErrorCode::Config, where + "duplicate key '" + key + "'");
    }
    char* end = nullptr;
    const double value = std::strtod(raw.c_str(), &end);
    if (raw.empty() || end != raw.c_str() + raw.size() || !std::isfinite(value)) {
      throw Error(ErrorCode::Config, where + "value of '" + key + "' is not a finite number");
    }
    values[key] = value;
  }
  for (const char* k : kKeys) {
    if (values.count(k) == 0) {
      throw Error(ErrorCode::Config, std::string("missing key '") + k + "'");
    }
  }

  CircuitSpec spec;
  spec.resistor = {values["r_ohms"], values["r_tol_pct"] / 100.0};
  spec.inductor_resistance = {values["rl_ohms"], values["rl_tol_pct"] / 100.0};
  spec.inductance = {values["l_henries"], values["l_tol_pct"] / 100.0};
  spec.capacitance = {values["c_farads"], values["c_tol_pct"] / 100.0};
  spec.validate();
  return spec;
}

CircuitSpec load_circuit_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open circuit config '" + path.string() + "'");
  }
  return parse_circuit_spec(in);
}

void write_circuit_spec(std::ostream& out, const CircuitSpec& spec) {
  const auto line = [&](const char* key, double v) { out << key << " = " << format_real(v) << '\n'; };
  line("r_ohms", spec.resistor.nominal);
  line("r_tol_pct", spec.resistor.tol_fraction * 100.0);
  line("rl_ohms", spec.inductor_resistance.nominal);
  line("rl_tol_pct", spec.inductor_resistance.tol_fraction * 100.0);
  line("l_henries", spec.inductance.nominal);
  line("l_tol_pct", spec.inductance.tol_fraction * 100.0);
  line("c_farads", spec.capacitance.nominal);
  line("c_tol_pct", spec.capacitance.tol_fraction * 100.0);
}

void write_band_csv(std::ostream& out, const ResponseBand& band) {
  out << "t,lower,nominal,upper\n";
  for (std::size_t i = 0; i < band.size(); ++i) {
    out << format_real(band.t[i]) << ',' << format_real(band.lower[i]) << ','
        << format_real(band.nominal[i]) << ',' << format_real(band.upper[i]) << '\n';
  }
}

void write_nominal_csv(std::ostream& out, const ResponseBand& band) {
  out << "t,v\n";
  for (std::size_t i = 0; i < band.size(); ++i) {
    out << format_real(band.t[i]) << ',' << format_real(band.nominal[i]) << '\n';
  }
}

}  // namespace rlcband
