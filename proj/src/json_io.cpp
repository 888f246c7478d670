#include "gptstat/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "gptstat/errors.hpp"

namespace gptstat {

namespace {

using nlohmann::json;

void append_int_rows(std::string& out, const std::vector<OccupationState>& states,
                     const std::string& indent) {
  for (size_t i = 0; i < states.size(); ++i) {
    out += indent;
    out += '[';
    const std::vector<int>& counts = states[i].counts;
    for (size_t k = 0; k < counts.size(); ++k) {
      if (k) out += ", ";
      out += std::to_string(counts[k]);
    }
    out += (i + 1 < states.size()) ? "],\n" : "]\n";
  }
}

void append_double_row(std::string& out, const double* values, int count) {
  out += '[';
  for (int k = 0; k < count; ++k) {
    if (k) out += ", ";
    out += format_double(values[k]);
  }
  out += ']';
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& require_key(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  return obj.at(key);
}

int require_positive_int(const json& obj, const char* key) {
  const json& v = require_key(obj, key);
  if (!v.is_number_integer() || v.get<int>() < 1) {
    throw ParseError(std::string("key \"") + key +
                     "\" must be a positive integer");
  }
  return v.get<int>();
}

// The serialized basis must reproduce enumerate_basis exactly; matrices are
// meaningful only relative to that ordering.
void require_canonical_basis(const json& listed, const ModeBasis& canonical,
                             const char* key) {
  if (!listed.is_array() ||
      listed.size() != static_cast<size_t>(canonical.size())) {
    throw StructuralError(std::string(key) + " has " +
                          std::to_string(listed.size()) + " states, expected " +
                          std::to_string(canonical.size()));
  }
  for (int i = 0; i < canonical.size(); ++i) {
    const json& row = listed.at(i);
    const std::vector<int>& counts = canonical.state(i).counts;
    bool same = row.is_array() && row.size() == counts.size();
    if (same) {
      for (size_t k = 0; k < counts.size(); ++k) {
        if (!row.at(k).is_number_integer() ||
            row.at(k).get<int>() != counts[k]) {
          same = false;
          break;
        }
      }
    }
    if (!same) {
      throw StructuralError(std::string(key) + " entry " + std::to_string(i) +
                            " does not match the canonical ordering (expected " +
                            canonical.state(i).str() + ")");
    }
  }
}

std::vector<double> require_double_array(const json& v, size_t count,
                                         const char* what) {
  if (!v.is_array() || v.size() != count) {
    throw ParseError(std::string(what) + " must be an array of " +
                     std::to_string(count) + " numbers");
  }
  std::vector<double> out(count);
  for (size_t i = 0; i < count; ++i) {
    if (!v.at(i).is_number()) {
      throw ParseError(std::string(what) + " entry " + std::to_string(i) +
                       " is not a number");
    }
    out[i] = v.at(i).get<double>();
  }
  return out;
}

void append_condition(std::string& out, const char* key,
                      const ConditionResult& c) {
  out += std::string("  \"") + key + "\": {\"pass\": " +
         (c.pass ? "true" : "false") +
         ", \"max_deviation\": " + format_double(c.max_deviation) +
         ", \"detail\": " + json(c.detail).dump() + "}";
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string matrix_to_json(const TransitionMatrix& t) {
  std::string out = "{\n";
  out += "  \"N_in\": " + std::to_string(t.input_basis().particles()) + ",\n";
  out += "  \"M\": " + std::to_string(t.input_basis().modes()) + ",\n";
  out += "  \"N_out\": " + std::to_string(t.output_basis().particles()) + ",\n";
  out += "  \"basis_in\": [\n";
  append_int_rows(out, t.input_basis().states(), "    ");
  out += "  ],\n";
  out += "  \"basis_out\": [\n";
  append_int_rows(out, t.output_basis().states(), "    ");
  out += "  ],\n";
  out += "  \"rows\": [\n";
  for (int i = 0; i < t.rows(); ++i) {
    out += "    ";
    append_double_row(out, t.entries().data() + static_cast<size_t>(i) * t.cols(),
                      t.cols());
    out += (i + 1 < t.rows()) ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string vector_to_json(const ProbVector& p) {
  std::string out = "{\n";
  out += "  \"N_in\": " + std::to_string(p.basis().particles()) + ",\n";
  out += "  \"M\": " + std::to_string(p.basis().modes()) + ",\n";
  out += "  \"basis\": [\n";
  append_int_rows(out, p.basis().states(), "    ");
  out += "  ],\n";
  out += "  \"p\": ";
  append_double_row(out, p.values().data(), static_cast<int>(p.size()));
  out += "\n}\n";
  return out;
}

std::string unitary_to_json(const ComplexMatrix& u) {
  std::string out = "[\n";
  for (int i = 0; i < u.order(); ++i) {
    out += "  [";
    for (int j = 0; j < u.order(); ++j) {
      if (j) out += ", ";
      out += "[" + format_double(u(i, j).real()) + ", " +
             format_double(u(i, j).imag()) + "]";
    }
    out += (i + 1 < u.order()) ? "],\n" : "]\n";
  }
  out += "]\n";
  return out;
}

std::string report_to_json(const PhysicalityReport& report) {
  std::string out = "{\n";
  append_condition(out, "doubly_stochastic", report.doubly_stochastic);
  out += ",\n";
  append_condition(out, "no_interaction", report.no_interaction);
  out += ",\n";
  out += "  \"evolution\": {\"pass\": ";
  out += report.evolution.pass ? "true" : "false";
  out += ", \"max_deviation\": " + format_double(report.evolution.max_deviation);
  out += ", \"detail\": " + json(report.evolution.detail).dump() + "},\n";
  out += "  \"beta\": ";
  out += report.beta ? format_double(*report.beta) : "null";
  out += ",\n  \"realizable\": ";
  out += report.realizable ? "true" : "false";
  out += ",\n  \"theta\": ";
  out += report.theta ? format_double(*report.theta) : "null";
  out += ",\n  \"witnesses\": [";
  for (size_t w = 0; w < report.evolution.witnesses.size(); ++w) {
    const EvolutionWitness& wit = report.evolution.witnesses[w];
    if (w) out += ",";
    out += "\n    {\"input\": [";
    for (size_t k = 0; k < wit.input.counts.size(); ++k) {
      if (k) out += ", ";
      out += std::to_string(wit.input.counts[k]);
    }
    out += "], \"observed\": ";
    append_double_row(out, wit.observed.data(),
                      static_cast<int>(wit.observed.size()));
    out += ", \"expected\": ";
    append_double_row(out, wit.expected.data(),
                      static_cast<int>(wit.expected.size()));
    out += "}";
  }
  if (!report.evolution.witnesses.empty()) out += "\n  ";
  out += "]\n}\n";
  return out;
}

TransitionMatrix matrix_from_json(const std::string& text) {
  const json j = parse_text(text);
  const int n_in = require_positive_int(j, "N_in");
  const int modes = require_positive_int(j, "M");
  const int n_out = require_positive_int(j, "N_out");
  const ModeBasis in = enumerate_basis(n_in, modes);
  const ModeBasis out = enumerate_basis(n_out, modes);
  require_canonical_basis(require_key(j, "basis_in"), in, "basis_in");
  require_canonical_basis(require_key(j, "basis_out"), out, "basis_out");
  const json& rows = require_key(j, "rows");
  if (!rows.is_array() || rows.size() != static_cast<size_t>(out.size())) {
    throw ParseError("rows must be an array of " + std::to_string(out.size()) +
                     " rows");
  }
  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(out.size()) * in.size());
  for (int i = 0; i < out.size(); ++i) {
    const std::vector<double> row =
        require_double_array(rows.at(i), in.size(), "rows entry");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return TransitionMatrix(in, out, std::move(entries));
}

ProbVector vector_from_json(const std::string& text, double tol) {
  const json j = parse_text(text);
  const int n = require_positive_int(j, "N_in");
  const int modes = require_positive_int(j, "M");
  const ModeBasis basis = enumerate_basis(n, modes);
  require_canonical_basis(require_key(j, "basis"), basis, "basis");
  std::vector<double> p =
      require_double_array(require_key(j, "p"), basis.size(), "p");
  return ProbVector(basis, std::move(p), tol);
}

ComplexMatrix unitary_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_array() || j.empty()) {
    throw ParseError("unitary must be a nonempty 2D array of [re, im] pairs");
  }
  const size_t n = j.size();
  std::vector<std::complex<double>> entries;
  entries.reserve(n * n);
  for (size_t i = 0; i < n; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != n) {
      throw ParseError("unitary row " + std::to_string(i) + " must have " +
                       std::to_string(n) + " entries");
    }
    for (size_t k = 0; k < n; ++k) {
      const json& cell = row.at(k);
      if (!cell.is_array() || cell.size() != 2 || !cell.at(0).is_number() ||
          !cell.at(1).is_number()) {
        throw ParseError("unitary entry (" + std::to_string(i) + ", " +
                         std::to_string(k) + ") must be an [re, im] pair");
      }
      entries.emplace_back(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return ComplexMatrix(static_cast<int>(n), std::move(entries));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw NotFoundError("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw NotFoundError("cannot write " + path);
  }
  out << content;
}

TransitionMatrix load_matrix(const std::string& path) {
  return matrix_from_json(read_text_file(path));
}

ComplexMatrix load_unitary(const std::string& path) {
  return unitary_from_json(read_text_file(path));
}

}  // namespace gptstat
