#include "wwl/config.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>

namespace wwl {

namespace {

struct Entry {
  const char* key;
  std::function<void(ExperimentConfig&, const std::string&)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "': not a number: '" + v + "'");
  }
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "': not an integer: '" + v + "'");
  }
}

std::string unquote(const std::string& v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
    return v.substr(1, v.size() - 2);
  return v;
}

Entry dbl(const char* key, double ExperimentConfig::* member) {
  return {key,
          [key, member](ExperimentConfig& c, const std::string& v) {
            c.*member = parse_double(key, v);
          },
          [member](const ExperimentConfig& c) { return fmt_double(c.*member); }};
}

Entry integer(const char* key, int ExperimentConfig::* member) {
  return {key,
          [key, member](ExperimentConfig& c, const std::string& v) {
            c.*member = (int)parse_int(key, v);
          },
          [member](const ExperimentConfig& c) { return std::to_string(c.*member); }};
}

Entry str(const char* key, std::string ExperimentConfig::* member) {
  return {key,
          [member](ExperimentConfig& c, const std::string& v) { c.*member = unquote(v); },
          [member](const ExperimentConfig& c) { return "\"" + c.*member + "\""; }};
}

const std::vector<Entry>& schema() {
  static const std::vector<Entry> entries = {
      integer("params.d", &ExperimentConfig::d),
      dbl("params.alpha", &ExperimentConfig::alpha),
      integer("grid.n_lat", &ExperimentConfig::n_lat),
      dbl("grid.lateral_extent", &ExperimentConfig::lateral_extent),
      integer("grid.n_rad", &ExperimentConfig::n_rad),
      dbl("grid.radial_extent", &ExperimentConfig::radial_extent),
      dbl("scales.a_min", &ExperimentConfig::a_min),
      dbl("scales.a_max", &ExperimentConfig::a_max),
      integer("scales.n_scales", &ExperimentConfig::n_scales),
      integer("theta_order", &ExperimentConfig::theta_order),
      str("wavelet_phi.family", &ExperimentConfig::phi_family),
      integer("wavelet_phi.m", &ExperimentConfig::phi_m),
      dbl("wavelet_phi.sigma", &ExperimentConfig::phi_sigma),
      dbl("wavelet_phi.band_lo", &ExperimentConfig::phi_band_lo),
      dbl("wavelet_phi.band_hi", &ExperimentConfig::phi_band_hi),
      str("wavelet_psi.family", &ExperimentConfig::psi_family),
      integer("wavelet_psi.m", &ExperimentConfig::psi_m),
      dbl("wavelet_psi.sigma", &ExperimentConfig::psi_sigma),
      dbl("wavelet_psi.band_lo", &ExperimentConfig::psi_band_lo),
      dbl("wavelet_psi.band_hi", &ExperimentConfig::psi_band_hi),
      str("input.field", &ExperimentConfig::input_field),
      dbl("input.sigma", &ExperimentConfig::input_sigma),
      integer("input.m", &ExperimentConfig::input_m),
      dbl("input.k", &ExperimentConfig::input_k),
      dbl("input.band_lo", &ExperimentConfig::input_band_lo),
      dbl("input.band_hi", &ExperimentConfig::input_band_hi),
      str("input2.field", &ExperimentConfig::input2_field),
      dbl("input2.sigma", &ExperimentConfig::input2_sigma),
      integer("input2.m", &ExperimentConfig::input2_m),
      dbl("input2.k", &ExperimentConfig::input2_k),
      dbl("input2.band_lo", &ExperimentConfig::input2_band_lo),
      dbl("input2.band_hi", &ExperimentConfig::input2_band_hi),
      str("windows", &ExperimentConfig::windows),
      integer("sweep_k_max", &ExperimentConfig::sweep_k_max),
      integer("probes.n_magnitudes", &ExperimentConfig::probes_n_magnitudes),
      dbl("probes.mag_lo", &ExperimentConfig::probes_mag_lo),
      dbl("probes.mag_hi", &ExperimentConfig::probes_mag_hi),
      dbl("spread_tol", &ExperimentConfig::spread_tol),
      {"seed",
       [](ExperimentConfig& c, const std::string& v) {
         c.seed = (std::uint64_t)parse_int("seed", v);
       },
       [](const ExperimentConfig& c) { return std::to_string(c.seed); }},
      str("output_dir", &ExperimentConfig::output_dir),
      dbl("tol.kernel_bound", &ExperimentConfig::tol_kernel_bound),
      dbl("tol.kernel_symmetry", &ExperimentConfig::tol_kernel_symmetry),
      dbl("tol.plancherel", &ExperimentConfig::tol_plancherel),
      dbl("tol.round_trip", &ExperimentConfig::tol_round_trip),
      dbl("tol.self_duality", &ExperimentConfig::tol_self_duality),
      dbl("tol.translation_identity", &ExperimentConfig::tol_translation_identity),
      dbl("tol.translation_mass", &ExperimentConfig::tol_translation_mass),
      dbl("tol.translation_routes", &ExperimentConfig::tol_translation_routes),
      dbl("tol.translation_norm_slack", &ExperimentConfig::tol_translation_norm_slack),
      dbl("tol.factorization", &ExperimentConfig::tol_factorization),
      dbl("tol.convolution_oracle", &ExperimentConfig::tol_convolution_oracle),
      dbl("tol.young_slack", &ExperimentConfig::tol_young_slack),
      dbl("tol.admissibility", &ExperimentConfig::tol_admissibility),
      dbl("tol.parseval", &ExperimentConfig::tol_parseval),
      dbl("tol.orthogonality", &ExperimentConfig::tol_orthogonality),
      dbl("tol.multiplier_oracle", &ExperimentConfig::tol_multiplier_oracle),
      dbl("tol.multiplier_bound_slack", &ExperimentConfig::tol_multiplier_bound_slack),
      dbl("tol.window_additivity", &ExperimentConfig::tol_window_additivity),
      dbl("tol.equivalence", &ExperimentConfig::tol_equivalence),
      dbl("tol.sweep_final", &ExperimentConfig::tol_sweep_final),
      dbl("tol.sweep_slack", &ExperimentConfig::tol_sweep_slack),
      dbl("tol.cwt_bound_slack", &ExperimentConfig::tol_cwt_bound_slack),
      dbl("tol.cwt_oracle", &ExperimentConfig::tol_cwt_oracle),
  };
  return entries;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ExperimentConfig ExperimentConfig::from_kv(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    bool found = false;
    for (const auto& entry : schema()) {
      if (key == entry.key) {
        entry.set(cfg, value);
        found = true;
        break;
      }
    }
    if (!found)
      throw ConfigError("config: line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

std::string ExperimentConfig::to_kv() const {
  std::string out;
  for (const auto& entry : schema()) {
    out += entry.key;
    out += " = ";
    out += entry.get(*this);
    out += "\n";
  }
  return out;
}

void ExperimentConfig::validate() const {
  if (d < 1) throw ConfigError("config: params.d must be >= 1");
  if (!(alpha > -0.5)) throw ConfigError("config: params.alpha must be > -1/2");
  if (n_lat < 8 || n_lat % 2) throw ConfigError("config: grid.n_lat must be even and >= 8");
  if (n_rad < 8) throw ConfigError("config: grid.n_rad must be >= 8");
  if (!(lateral_extent > 0.0) || !(radial_extent > 0.0))
    throw ConfigError("config: grid extents must be positive");
  if (!(0.0 < a_min && a_min < a_max)) throw ConfigError("config: need 0 < a_min < a_max");
  if (n_scales < 2) throw ConfigError("config: scales.n_scales must be >= 2");
  if (theta_order < 2) throw ConfigError("config: theta_order must be >= 2");
  if (probes_n_magnitudes < 1) throw ConfigError("config: probes.n_magnitudes must be >= 1");
  if (!(0.0 < probes_mag_lo && probes_mag_lo <= probes_mag_hi))
    throw ConfigError("config: bad probe magnitude range");
  parse_windows(windows);
}

std::vector<std::pair<double, double>> parse_windows(const std::string& spec) {
  std::vector<std::pair<double, double>> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ConfigError("config: windows entry '" + item + "' is not gamma:delta");
    const double g = parse_double("windows", trim(item.substr(0, colon)));
    const double dd = parse_double("windows", trim(item.substr(colon + 1)));
    if (!(0.0 < g && g <= dd))
      throw ConfigError("config: windows entry '" + item + "' needs 0 < gamma <= delta");
    out.push_back({g, dd});
  }
  if (out.empty()) throw ConfigError("config: windows list is empty");
  return out;
}

}  // namespace wwl
