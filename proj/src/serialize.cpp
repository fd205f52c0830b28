#include "flagschur/serialize.hpp"

namespace flagschur {

namespace {

template <class Coeff, class ToJson>
nlohmann::json encode(const BasicElement<Coeff>& x, ToJson coeff_json) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [a, c] : x.terms()) terms.push_back({{"matrix", matrix_text(a)}, {"coeff", coeff_json(c)}});
  return {{"n", x.n()}, {"r", x.r()}, {"terms", terms}};
}

template <class Coeff, class FromJson>
BasicElement<Coeff> decode(const nlohmann::json& j, FromJson coeff_from) {
  try {
    BasicElement<Coeff> x(j.at("n").get<int>(), j.at("r").get<int>());
    for (const auto& t : j.at("terms")) {
      const OrbitMatrix a = parse_matrix(t.at("matrix").get<std::string>());
      if (a.n() != x.n() || a.r() != x.r()) throw ParseError("term " + matrix_text(a) + " does not match n and r");
      x.add(a, coeff_from(t.at("coeff")));
    }
    return x;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("malformed element JSON: ") + err.what());
  }
}

}  // namespace

nlohmann::json element_to_json(const Element& x) { return encode(x, qpoly_to_json); }

Element element_from_json(const nlohmann::json& j) { return decode<QPoly>(j, qpoly_from_json); }

nlohmann::json int_element_to_json(const IntElement& x) { return encode(x, bigint_to_json); }

IntElement int_element_from_json(const nlohmann::json& j) { return decode<BigInt>(j, bigint_from_json); }

nlohmann::json word_to_json(const GeneratorWord& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : w) {
    const char* tok = t.kind == TokenKind::E ? "E" : t.kind == TokenKind::F ? "F" : "K";
    out.push_back({{"tok", tok}, {"i", t.i}, {"d", t.d.parts()}});
  }
  return out;
}

GeneratorWord word_from_json(const nlohmann::json& j) {
  try {
    GeneratorWord w;
    for (const auto& t : j) {
      const std::string tok = t.at("tok").get<std::string>();
      TokenKind kind;
      if (tok == "E") {
        kind = TokenKind::E;
      } else if (tok == "F") {
        kind = TokenKind::F;
      } else if (tok == "K") {
        kind = TokenKind::K;
      } else {
        throw ParseError("unknown token '" + tok + "'");
      }
      w.push_back(Token{kind, t.value("i", 0), Composition(t.at("d").get<std::vector<int>>())});
    }
    return w;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("malformed word JSON: ") + err.what());
  }
}

}  // namespace flagschur
