#include "flagschur/io.hpp"
#include "flagschur/serialize.hpp"
#include "flagschur/zeroschur.hpp"

#include <doctest.h>

using namespace flagschur;

TEST_CASE("matrix text") {
  const OrbitMatrix a{{0, 1}, {1, 0}};
  CHECK(matrix_text(a) == "0,1;1,0");
  CHECK(parse_matrix(" 0, 1 ; 1,0 ") == a);
  CHECK_THROWS_AS(parse_matrix("1,0;1"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,-1;0,0"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,x;0,0"), ParseError);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  for (const auto& m : orbit_matrices(3, 2)) CHECK(parse_matrix(matrix_text(m)) == m);
}

TEST_CASE("composition text") {
  CHECK(parse_composition("(1,0,2)") == Composition({1, 0, 2}));
  CHECK(parse_composition("2") == Composition({2}));
  CHECK(composition_text(Composition({1, 1})) == "1,1");
  CHECK_THROWS_AS(parse_composition("1,,2"), ParseError);
}

TEST_CASE("polynomial JSON") {
  const QPoly p = quantum_int(3);
  CHECK(qpoly_to_json(p).dump() == "[1,1,1]");
  CHECK(qpoly_from_json(qpoly_to_json(p)) == p);
  const BigInt huge = BigInt(1) << 100;
  CHECK(bigint_to_json(huge).is_string());
  CHECK(bigint_from_json(bigint_to_json(huge)) == huge);
  CHECK_THROWS_AS(qpoly_from_json(nlohmann::json::parse("{}")), ParseError);
}

TEST_CASE("element JSON round trip") {
  Element x(2, 2);
  x.add(OrbitMatrix{{0, 1}, {1, 0}}, quantum_int(2));
  x.add(OrbitMatrix{{1, 0}, {0, 1}}, QPoly(-3));
  const auto j = element_to_json(x);
  CHECK(j.dump() ==
        "{\"n\":2,\"r\":2,\"terms\":[{\"coeff\":[1,1],\"matrix\":\"0,1;1,0\"},{\"coeff\":[-3],\"matrix\":\"1,0;0,1\"}]}");
  CHECK(element_from_json(nlohmann::json::parse(j.dump())) == x);

  IntElement y(2, 2);
  y.add(OrbitMatrix{{0, 1}, {1, 0}}, BigInt(4));
  CHECK(int_element_from_json(int_element_to_json(y)) == y);
  CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"({"n":2,"r":2,"terms":[{"matrix":"1,0;0,0","coeff":[1]}]})")),
                  ParseError);
}

TEST_CASE("word JSON round trip") {
  for (const auto& a : orbit_matrices(3, 3)) {
    const GeneratorWord w = word_decompose(a);
    CHECK(word_from_json(nlohmann::json::parse(word_to_json(w).dump())) == w);
  }
  CHECK_THROWS_AS(word_from_json(nlohmann::json::parse(R"([{"tok":"X","i":1,"d":[1,1]}])")), ParseError);
}
