#include "flagschur/io.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace flagschur {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("empty integer field");
  long long v = 0;
  bool neg = false;
  std::size_t k = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    k = 1;
  }
  if (k == s.size()) throw ParseError("malformed integer '" + std::string(s) + "'");
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("malformed integer '" + std::string(s) + "'");
    v = v * 10 + (s[k] - '0');
    if (v > std::numeric_limits<int>::max()) throw ParseError("integer out of range '" + std::string(s) + "'");
  }
  return static_cast<int>(neg ? -v : v);
}

}  // namespace

std::string matrix_text(const OrbitMatrix& a) {
  std::string s;
  for (int i = 1; i <= a.n(); ++i) {
    if (i > 1) s += ';';
    for (int j = 1; j <= a.n(); ++j) {
      if (j > 1) s += ',';
      s += std::to_string(a(i, j));
    }
  }
  return s;
}

OrbitMatrix parse_matrix(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty matrix");
  const auto rows = split(text, ';');
  const int n = static_cast<int>(rows.size());
  std::vector<int> entries;
  for (const auto& row : rows) {
    const auto cells = split(row, ',');
    if (static_cast<int>(cells.size()) != n) {
      throw ParseError("matrix '" + std::string(text) + "' is not square");
    }
    for (const auto& c : cells) {
      const int v = parse_int(c);
      if (v < 0) throw ParseError("matrix '" + std::string(text) + "' has a negative entry");
      entries.push_back(v);
    }
  }
  return OrbitMatrix(n, std::move(entries));
}

std::string composition_text(const Composition& d) { return d.to_string(); }

Composition parse_composition(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) throw ParseError("empty composition");
  std::vector<int> parts;
  for (const auto& c : split(text, ',')) {
    const int v = parse_int(c);
    if (v < 0) throw ParseError("composition '" + std::string(text) + "' has a negative part");
    parts.push_back(v);
  }
  return Composition(std::move(parts));
}

nlohmann::json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(x);
  }
  return x.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("malformed integer string " + j.dump());
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

nlohmann::json qpoly_to_json(const QPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(bigint_to_json(c));
  return arr;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array, got " + j.dump());
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(bigint_from_json(c));
  return QPoly(std::move(coeffs));
}

}  // namespace flagschur
