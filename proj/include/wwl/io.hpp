// Serialization: field/spectrum dumps (JSON header + CSV values), CWT
// exports, CSV tables and machine-readable reports.
#pragma once

#include <json.hpp>

#include "wwl/wavelet.hpp"

namespace wwl {

using ordered_json = nlohmann::ordered_json;

// Writes <stem>.json (params, grid dims, extents) and <stem>.csv (node
// coordinates, re, im). Values round-trip bit-exactly at %.17g.
void save_field(const Field& f, const std::string& stem);
void save_spectrum(const Spectrum& F, const std::string& stem);
Field load_field(const std::string& stem);

// CSV (scale, coordinates..., re, im) plus a JSON summary. Matrices beyond
// max_rows are decimated in both scale and node before export.
void export_cwt(const CwtMatrix& m, const std::string& stem,
                std::size_t max_rows = 1u << 20);

// Generic CSV writer: header row then %.17g-formatted cells.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Report skeleton: schema version, tool id, config echo, seed.
ordered_json make_report(const std::string& subcommand, const std::string& config_echo,
                         std::uint64_t seed);

// One pass/fail entry in a report's "checks" array.
void add_check(ordered_json& report, const std::string& name, bool pass, double value,
               double tolerance, const std::string& details = "");

bool all_checks_pass(const ordered_json& report);

void write_report(const ordered_json& report, const std::string& path);

}  // namespace wwl
