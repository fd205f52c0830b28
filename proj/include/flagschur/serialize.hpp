#pragma once

// JSON forms of algebra elements and generator words.

#include "flagschur/io.hpp"
#include "flagschur/qschur.hpp"
#include "flagschur/zeroschur.hpp"

#include <json.hpp>

namespace flagschur {

/// {"n":2,"r":2,"terms":[{"matrix":"0,1;1,0","coeff":[0,1]}]}
nlohmann::json element_to_json(const Element& x);
Element element_from_json(const nlohmann::json& j);

/// Same layout with integer coefficients: "coeff": 3.
nlohmann::json int_element_to_json(const IntElement& x);
IntElement int_element_from_json(const nlohmann::json& j);

/// [{"tok":"E","i":1,"d":[0,2]}, ...]
nlohmann::json word_to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const nlohmann::json& j);

}  // namespace flagschur
