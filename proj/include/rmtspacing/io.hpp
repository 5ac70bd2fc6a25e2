#ifndef RMTSPACING_IO_HPP_
#define RMTSPACING_IO_HPP_

// Flat-file formats: CSV tables with a `#key=value` metadata header and JSON
// reports. Numbers are written in shortest round-trip form and metadata keys
// in insertion order, so identical inputs give byte-identical files.

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmtspacing/analysis.hpp"
#include "rmtspacing/chebfit.hpp"
#include "rmtspacing/ensemble.hpp"
#include "rmtspacing/errors.hpp"
#include "rmtspacing/transition.hpp"
#include "rmtspacing/version.hpp"

namespace rmtspacing::io {

using Json = nlohmann::ordered_json;

inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// Everything needed to regenerate an output file.
struct Provenance {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::optional<std::uint64_t> seed;
  std::string version{kVersion};

  Provenance& set(std::string key, std::string value) {
    for (auto& kv : config) {
      if (kv.first == key) {
        kv.second = std::move(value);
        return *this;
      }
    }
    config.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Provenance& set(std::string key, double value) { return set(std::move(key), format_double(value)); }
};

inline Json to_json(const Provenance& p) {
  Json j;
  j["command"] = p.command;
  Json cfg = Json::object();
  for (const auto& [k, v] : p.config) cfg[k] = v;
  j["config"] = cfg;
  if (p.seed) {
    j["seed"] = *p.seed;
  } else {
    j["seed"] = nullptr;
  }
  j["version"] = p.version;
  return j;
}

inline void write_provenance_header(std::ostream& os, const Provenance& p) {
  os << "#command=" << p.command << '\n';
  os << "#version=" << p.version << '\n';
  if (p.seed) os << "#seed=" << *p.seed << '\n';
  for (const auto& [k, v] : p.config) os << '#' << k << '=' << v << '\n';
}

inline std::string source_name(const transition::DensitySource& src) {
  if (const auto* beta = std::get_if<surmise::SurmiseBeta>(&src)) {
    return "surmise-" + std::to_string(beta->value());
  }
  return std::string(to_string(std::get<TransitionKind>(src)));
}

inline void write_pdf_csv(std::ostream& os, const transition::PdfTable& table,
                          const Provenance& prov) {
  write_provenance_header(os, prov);
  os << "#kind=" << source_name(table.source) << '\n';
  os << "#alpha=" << (table.alpha ? format_double(table.alpha->value()) : "none") << '\n';
  os << "#scale=" << to_string(table.scale) << '\n';
  os << "#mean_s=" << format_double(table.mean_s) << '\n';
  os << "#z_mode=" << (table.z_mode ? std::string(to_string(*table.z_mode)) : "none") << '\n';
  os << "#renormalized=" << (table.renormalized ? "true" : "false") << '\n';
  os << "#norm_factor=" << format_double(table.norm_factor) << '\n';
  os << "x,density\n";
  for (const auto& row : table.rows) {
    os << format_double(row.x) << ',' << format_double(row.density) << '\n';
  }
}

struct CsvTable {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::optional<std::string> get(const std::string& key) const {
    for (const auto& [k, v] : meta) {
      if (k == key) return v;
    }
    return std::nullopt;
  }
};

inline double parse_double(const std::string& text) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("csv: not a number: '" + text + "'");
  }
  if (pos != text.size()) throw UsageError("csv: trailing characters in '" + text + "'");
  return v;
}

/// Reads the files written by write_pdf_csv and write_spacings_csv.
inline CsvTable read_csv(std::istream& is) {
  CsvTable out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw UsageError("csv: malformed metadata line: " + line);
      out.meta.emplace_back(line.substr(1, eq - 1), line.substr(eq + 1));
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (out.columns.empty()) {
      out.columns = cells;
      continue;
    }
    if (cells.size() != out.columns.size()) throw UsageError("csv: ragged row: " + line);
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_double(c));
    out.rows.push_back(std::move(row));
  }
  return out;
}

inline void write_spacings_csv(std::ostream& os, const ensemble::SpacingSampleSet& set,
                               const Provenance& prov) {
  write_provenance_header(os, prov);
  os << "#alpha_vec=" << format_double(set.alpha.a1()) << ',' << format_double(set.alpha.a2())
     << ',' << format_double(set.alpha.a3()) << '\n';
  os << "#method=" << to_string(set.method) << '\n';
  os << "#n=" << set.count() << '\n';
  os << "s\n";
  for (double s : set.spacings) os << format_double(s) << '\n';
}

inline Json to_json(const analysis::KsReport& r) {
  return {{"statistic", r.statistic}, {"n", r.n}, {"threshold", r.threshold}, {"pass", r.pass}};
}

inline Json to_json(const chebfit::FitReport& r) {
  return {{"convention", to_string(r.convention)},
          {"max_rel_err", r.max_rel_err},
          {"max_abs_err", r.max_abs_err},
          {"worst_rel_y", r.worst_rel_y},
          {"worst_abs_y", r.worst_abs_y},
          {"grid_points", r.grid.size()}};
}

inline Json to_json(const chebfit::ChebCoeffs& c) {
  return {{"convention", to_string(c.convention)}, {"coefficients", c.a}};
}

inline Json to_json(const chebfit::RefitResult& r) {
  Json j = to_json(r.coeffs);
  j["order"] = r.coeffs.a.size();
  j["n_points"] = r.n_points;
  j["residual_rms"] = r.residual_rms;
  j["validation"] = to_json(r.validation);
  return j;
}

inline chebfit::ChebConvention parse_convention(const std::string& name) {
  if (name == "direct-y") return chebfit::ChebConvention::DirectY;
  if (name == "remapped-y") return chebfit::ChebConvention::RemappedY;
  throw UsageError("unknown Chebyshev convention '" + name + "'");
}

/// Accepts either {"coefficients": [...], "convention": "..."} or a bare array.
inline chebfit::ChebCoeffs coefficients_from_json(const Json& j) {
  chebfit::ChebCoeffs out;
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("coefficients")) throw UsageError("coefficient file lacks 'coefficients'");
    arr = &j.at("coefficients");
    if (j.contains("convention")) out.convention = parse_convention(j.at("convention").get<std::string>());
  }
  if (!arr->is_array() || arr->empty()) throw UsageError("coefficients must be a non-empty array");
  for (const auto& v : *arr) {
    if (!v.is_number()) throw UsageError("coefficients must be numbers");
    out.a.push_back(v.get<double>());
  }
  return out;
}

inline chebfit::ChebCoeffs read_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open coefficient file '" + path + "'");
  try {
    return coefficients_from_json(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw UsageError("coefficient file '" + path + "': " + e.what());
  }
}

}  // namespace rmtspacing::io

#endif  // RMTSPACING_IO_HPP_
