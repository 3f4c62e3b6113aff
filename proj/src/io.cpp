#include "wwl/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace wwl {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json grid_header(const Grid& g) {
  ordered_json j;
  j["params"] = {{"d", g.params().d}, {"alpha", g.params().alpha}};
  j["grid"] = {{"n_lat", g.n_lat()},
               {"lateral_extent", g.lateral_extent()},
               {"n_rad", g.n_rad()},
               {"radial_extent", g.radial_extent()}};
  return j;
}

void dump_values(const Grid& g, const std::vector<cplx>& values, bool spectral,
                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  const int d = g.params().d;
  for (int i = 0; i < d; ++i) out << (spectral ? "lambda" : "x") << i + 1 << ",";
  out << (spectral ? "rho" : "r") << ",re,im\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto p = spectral ? g.spectral_point_at(i) : g.point_at(i);
    for (double c : p) out << g17(c) << ",";
    out << g17(values[i].real()) << "," << g17(values[i].imag()) << "\n";
  }
}

}  // namespace

void save_field(const Field& f, const std::string& stem) {
  if (!f.is_sampled())
    throw CapabilityError("save_field: sample the field onto a grid first");
  ordered_json j = grid_header(f.grid());
  j["schema"] = 1;
  j["kind"] = "field";
  j["count"] = f.values().size();
  j["values_file"] = std::filesystem::path(stem + ".csv").filename().string();
  std::ofstream hdr(stem + ".json");
  if (!hdr) throw std::runtime_error("cannot write " + stem + ".json");
  hdr << j.dump(2) << "\n";
  dump_values(f.grid(), f.values(), false, stem + ".csv");
}

void save_spectrum(const Spectrum& F, const std::string& stem) {
  ordered_json j = grid_header(F.grid);
  j["schema"] = 1;
  j["kind"] = "spectrum";
  j["count"] = F.values.size();
  j["values_file"] = std::filesystem::path(stem + ".csv").filename().string();
  std::ofstream hdr(stem + ".json");
  if (!hdr) throw std::runtime_error("cannot write " + stem + ".json");
  hdr << j.dump(2) << "\n";
  dump_values(F.grid, F.values, true, stem + ".csv");
}

Field load_field(const std::string& stem) {
  std::ifstream hdr(stem + ".json");
  if (!hdr) throw std::runtime_error("cannot read " + stem + ".json");
  ordered_json j;
  hdr >> j;
  if (j.value("kind", "") != "field") throw std::runtime_error("not a field dump: " + stem);
  WeinsteinParams params(j["params"]["d"].get<int>(), j["params"]["alpha"].get<double>());
  Grid g = build_grid(params, j["grid"]["n_lat"].get<int>(),
                      j["grid"]["lateral_extent"].get<double>(),
                      j["grid"]["n_rad"].get<int>(),
                      j["grid"]["radial_extent"].get<double>());
  std::ifstream csv(stem + ".csv");
  if (!csv) throw std::runtime_error("cannot read " + stem + ".csv");
  std::string line;
  std::getline(csv, line);  // header
  std::vector<cplx> values;
  values.reserve(g.node_count());
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    // last two columns are re, im
    const auto last = line.rfind(',');
    const auto prev = line.rfind(',', last - 1);
    values.emplace_back(std::stod(line.substr(prev + 1, last - prev - 1)),
                        std::stod(line.substr(last + 1)));
  }
  if (values.size() != g.node_count())
    throw std::runtime_error("field dump has wrong value count: " + stem);
  return Field::sampled(g, std::move(values));
}

void export_cwt(const CwtMatrix& m, const std::string& stem, std::size_t max_rows) {
  const std::size_t nodes = m.grid.node_count();
  const std::size_t total = m.values.size();
  std::size_t scale_step = 1, node_step = 1;
  while ((m.scales.nodes.size() / scale_step) * (nodes / node_step) > max_rows) {
    if (nodes / node_step > m.scales.nodes.size() / scale_step) node_step *= 2;
    else scale_step *= 2;
  }
  {
    std::ofstream out(stem + ".csv");
    if (!out) throw std::runtime_error("cannot write " + stem + ".csv");
    const int d = m.grid.params().d;
    out << "scale,";
    for (int i = 0; i < d; ++i) out << "x" << i + 1 << ",";
    out << "r,re,im\n";
    for (std::size_t s = 0; s < m.scales.nodes.size(); s += scale_step) {
      for (std::size_t i = 0; i < nodes; i += node_step) {
        const auto p = m.grid.point_at(i);
        out << g17(m.scales.nodes[s]) << ",";
        for (double c : p) out << g17(c) << ",";
        const cplx v = m.values[s * nodes + i];
        out << g17(v.real()) << "," << g17(v.imag()) << "\n";
      }
    }
  }
  ordered_json j = grid_header(m.grid);
  j["schema"] = 1;
  j["kind"] = "cwt";
  j["n_scales"] = m.scales.nodes.size();
  j["a_min"] = m.scales.a_min;
  j["a_max"] = m.scales.a_max;
  j["max_abs"] = m.max_abs;
  j["total_coefficients"] = total;
  j["csv_scale_step"] = scale_step;
  j["csv_node_step"] = node_step;
  std::ofstream hdr(stem + ".json");
  hdr << j.dump(2) << "\n";
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (std::size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 < header.size() ? "," : "");
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << g17(row[i]) << (i + 1 < row.size() ? "," : "");
    out << "\n";
  }
}

ordered_json make_report(const std::string& subcommand, const std::string& config_echo,
                         std::uint64_t seed) {
  ordered_json j;
  j["schema"] = 1;
  j["tool"] = "wwl";
  j["version"] = kVersion;
  j["subcommand"] = subcommand;
  j["seed"] = seed;
  j["config"] = config_echo;
  j["checks"] = ordered_json::array();
  j["outputs"] = ordered_json::array();
  j["timings"] = ordered_json::object();
  return j;
}

void add_check(ordered_json& report, const std::string& name, bool pass, double value,
               double tolerance, const std::string& details) {
  ordered_json c;
  c["name"] = name;
  c["pass"] = pass;
  c["value"] = value;
  c["tolerance"] = tolerance;
  if (!details.empty()) c["details"] = details;
  report["checks"].push_back(std::move(c));
}

bool all_checks_pass(const ordered_json& report) {
  for (const auto& c : report["checks"])
    if (!c["pass"].get<bool>()) return false;
  return true;
}

void write_report(const ordered_json& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << report.dump(2) << "\n";
}

}  // namespace wwl
