#include "qchan/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qchan::io {

using nlohmann::json;

namespace {

double number_at(const json& j, const char* what) {
  if (!j.is_number()) {
    throw ParseError(std::string("expected a number for ") + what);
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ParseError(std::string("non-finite value for ") + what);
  }
  return v;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty()) {
    throw ParseError(std::string(what) + ": matrix must be a nonempty array of rows");
  }
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows[0].is_array() ? rows[0].size() : 0);
  if (c == 0) throw ParseError(std::string(what) + ": empty matrix row");
  ComplexMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != c) {
      throw ParseError(std::string(what) + ": ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) {
      const json& e = row[j];
      if (!e.is_array() || e.size() != 2) {
        throw ParseError(std::string(what) +
                         ": entries must be [real, imag] pairs");
      }
      m(i, j) = cplx(number_at(e[0], "real part"), number_at(e[1], "imag part"));
    }
  }
  return m;
}

// %.17g round-trips doubles and is locale-independent enough for our CSV.
std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

KrausChannel parse_channel_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("channel JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("kraus")) {
    throw ParseError("channel JSON needs \"dim\" and \"kraus\" fields");
  }
  if (!j["dim"].is_number_integer()) {
    throw ParseError("channel JSON: \"dim\" must be an integer");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw ParseError("channel JSON: dim must be positive");
  if (!j["kraus"].is_array() || j["kraus"].empty()) {
    throw ParseError("channel JSON: \"kraus\" must be a nonempty array");
  }
  std::vector<ComplexMatrix> ops;
  for (const auto& mj : j["kraus"]) {
    ComplexMatrix m = matrix_from_json(mj, "kraus operator");
    if (m.rows() != dim || m.cols() != dim) {
      throw ParseError("channel JSON: Kraus operator shape differs from dim");
    }
    ops.push_back(std::move(m));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel load_channel(const std::string& path) {
  return parse_channel_json(read_file(path));
}

json channel_to_json(const KrausChannel& k) {
  json j;
  j["dim"] = k.dim;
  json ops = json::array();
  for (const auto& a : k.kraus) ops.push_back(matrix_to_json(a));
  j["kraus"] = std::move(ops);
  return j;
}

ComplexMatrix parse_matrix_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    int col = 0;
    while (std::getline(ls, cell, ',')) {
      ++col;
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        while (used < cell.size() &&
               (cell[used] == ' ' || cell[used] == '\t')) {
          ++used;
        }
        if (used != cell.size()) throw std::invalid_argument(cell);
        if (!std::isfinite(v)) throw std::invalid_argument(cell);
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("CSV line " + std::to_string(lineno) + ", field " +
                         std::to_string(col) + ": not a finite number");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("CSV line " + std::to_string(lineno) +
                       ": ragged row length");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("CSV: no rows");
  ComplexMatrix m(static_cast<int>(rows.size()),
                  static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m(i, j) = cplx(rows[i][j], 0.0);
  }
  return m;
}

ComplexMatrix load_matrix_csv(const std::string& path) {
  return parse_matrix_csv(read_file(path));
}

json decomposition_to_json(const BirkhoffDecomposition& d) {
  json arr = json::array();
  for (const auto& [w, p] : d.terms) {
    json term;
    term["weight"] = w;
    term["perm"] = p.map;
    arr.push_back(std::move(term));
  }
  return arr;
}

json validation_report_to_json(const ValidationReport& r) {
  json j;
  j["dim"] = r.dim;
  j["kraus_count"] = r.kraus_count;
  j["max_trace_preserving_deviation"] = r.max_trace_preserving_deviation;
  j["max_unital_deviation"] = r.max_unital_deviation;
  j["trace_preserving"] = r.trace_preserving;
  j["unital"] = r.unital;
  j["tolerance"] = r.tolerance;
  return j;
}

json extremality_report_to_json(const ExtremalityReport& r) {
  json j;
  j["kraus_count"] = r.kraus_count;
  j["test_vector_count"] = r.test_vector_count;
  j["ambient_dim"] = r.ambient_dim;
  j["rank"] = r.rank;
  j["extremal"] = r.extremal;
  return j;
}

json law_report_to_json(const LawReport& r) {
  json j;
  j["law_name"] = r.law_name;
  j["max_deviation"] = r.max_deviation;
  j["samples"] = r.samples;
  j["passed"] = r.passed;
  j["tolerance"] = r.tolerance;
  return j;
}

json fit_report_to_json(const FitReport& r) {
  json j;
  j["best_distance"] = r.best_distance;
  j["iterations"] = r.iterations;
  j["restarts_used"] = r.restarts_used;
  j["converged"] = r.converged;
  j["history"] = r.history;
  json mix;
  mix["dim"] = r.mixture.dim;
  json terms = json::array();
  for (const auto& [w, u] : r.mixture.terms) {
    json term;
    term["weight"] = w;
    term["u"] = matrix_to_json(u);
    terms.push_back(std::move(term));
  }
  mix["terms"] = std::move(terms);
  j["mixture"] = std::move(mix);
  return j;
}

json experiment_to_json(const ExperimentTable& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const ExperimentRow& r = t.rows[i];
    json row;
    row["k"] = r.k;
    row["m"] = r.m;
    row["best_distance"] = r.best_distance;
    row["chain_copies"] = r.chain_copies;
    row["iterations"] = r.iterations;
    row["converged"] = r.converged;
    row["history"] = t.histories[i];
    rows.push_back(std::move(row));
  }
  json j;
  j["rows"] = std::move(rows);
  return j;
}

std::string experiment_to_csv(const ExperimentTable& t) {
  std::string out = "k,m,best_distance,chain_copies,iterations,converged\n";
  for (const ExperimentRow& r : t.rows) {
    out += std::to_string(r.k) + "," + std::to_string(r.m) + "," +
           fmt_double(r.best_distance) + "," + std::to_string(r.chain_copies) +
           "," + std::to_string(r.iterations) + "," +
           (r.converged ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace qchan::io
