#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "pa/algebra.hpp"
#include "pa/report.hpp"

namespace pa {

class SparseMatrix;

struct JsonError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string element_to_json(const Element &e);
std::string element_to_json(const SymElement &e);
std::variant<Element, SymElement> element_from_json(std::string_view text);
Element numeric_element_from_json(std::string_view text);

std::string matrix_to_json(const SparseMatrix &m);
SparseMatrix matrix_from_json(std::string_view text);

std::string report_to_json(const Report &r);
Report report_from_json(std::string_view text);

// Canonical (compact, key-sorted) re-serialization of arbitrary JSON text.
std::string canonical_json(std::string_view text);

} // namespace pa
