#pragma once

// Text and JSON encodings shared by the CLI, the Python bindings and the
// fixtures.

#include "flagschur/core.hpp"
#include "flagschur/polyq.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagschur {

/// Raised for malformed textual input (CLI exit code 2).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "0,1;1,0": rows separated by ';', entries by ','.
std::string matrix_text(const OrbitMatrix& a);
OrbitMatrix parse_matrix(std::string_view text);

/// "1,1" style; also accepts surrounding parentheses.
std::string composition_text(const Composition& d);
Composition parse_composition(std::string_view text);

/// Ascending coefficient array, e.g. [1,1,1] for q^2+q+1. Coefficients that
/// do not fit in 64 bits are written as decimal strings.
nlohmann::json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

nlohmann::json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const nlohmann::json& j);

}  // namespace flagschur
