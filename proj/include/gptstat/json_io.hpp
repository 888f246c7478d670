#pragma once

#include <string>

#include "gptstat/basis.hpp"
#include "gptstat/physicality.hpp"
#include "gptstat/quantum.hpp"

namespace gptstat {

// Floats are printed with 17 significant digits so parsing the text back
// recovers the exact double.
std::string format_double(double value);

// Matrix schema: { "N_in", "M", "N_out", "basis_in", "basis_out", "rows" }
// with bases listed in canonical order and rows in output-basis order.
// Vectors use { "N_in", "M", "basis", "p" }. Unitaries are bare 2D arrays
// of [re, im] pairs.
std::string matrix_to_json(const TransitionMatrix& t);
std::string vector_to_json(const ProbVector& p);
std::string unitary_to_json(const ComplexMatrix& u);
std::string report_to_json(const PhysicalityReport& report);

// Loaders reject text that does not match the schema (ParseError) and bases
// that are not in canonical order (StructuralError). Matrix values are not
// validated here; checks run on whatever was loaded.
TransitionMatrix matrix_from_json(const std::string& text);
ProbVector vector_from_json(const std::string& text, double tol = kDefaultTol);
ComplexMatrix unitary_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
TransitionMatrix load_matrix(const std::string& path);
ComplexMatrix load_unitary(const std::string& path);

}  // namespace gptstat
