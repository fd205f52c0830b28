#include "flagschur/polyq.hpp"

#include <doctest.h>

#include <random>

using namespace flagschur;

namespace {

QPoly poly(std::vector<long long> cs) {
  std::vector<BigInt> out(cs.begin(), cs.end());
  return QPoly(std::move(out));
}

QPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long long> coeff(-20, 20);
  std::vector<long long> cs(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& c : cs) c = coeff(rng);
  return poly(cs);
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(QPoly().degree() == -1);
  CHECK(poly({0, 0}).is_zero());
  CHECK((QPoly::q() * QPoly::q()).to_string() == "q^2");
}

TEST_CASE("quantum integers and factorials") {
  CHECK(quantum_int(3) == poly({1, 1, 1}));
  CHECK(quantum_int(1) == QPoly(1));
  CHECK(quantum_int(0).is_zero());
  CHECK(quantum_factorial(2) == poly({1, 1}));
  CHECK(quantum_factorial(0) == QPoly(1));
  CHECK(quantum_factorial(3) == poly({1, 2, 2, 1}));
  for (int m = 0; m <= 12; ++m) {
    CHECK(quantum_int(m).eval(1) == m);
    CHECK(quantum_int(m).eval(0) == (m > 0 ? 1 : 0));
  }
  CHECK(gaussian_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(gaussian_multinomial({1, 1, 1}) == quantum_factorial(3));
}

TEST_CASE("interpolation") {
  CHECK(interpolate(std::vector<Point>{{2, 3}, {3, 4}}, 1) == poly({1, 1}));
  CHECK(interpolate(std::vector<Point>{{2, 1}, {3, 1}, {5, 1}}, 2) == QPoly(1));
  CHECK(interpolate(std::vector<Point>{{2, 7}, {3, 13}, {5, 31}}, 2) == poly({1, 1, 1}));
  // A held-out point that disagrees is an error, as is a non-integral fit.
  CHECK_THROWS_AS(interpolate(std::vector<Point>{{2, 3}, {3, 4}, {5, 7}}, 1), InterpolationError);
  CHECK_THROWS_AS(interpolate(std::vector<Point>{{2, 0}, {4, 1}}, 1), InterpolationError);

  std::mt19937_64 rng(11);
  const std::vector<int> xs{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  for (int trial = 0; trial < 200; ++trial) {
    const QPoly p = random_poly(rng, 8);
    const int bound = std::max(p.degree(), 0) + static_cast<int>(rng() % 2);
    std::vector<Point> pts;
    for (int k = 0; k <= bound + 1; ++k) pts.push_back({xs[static_cast<std::size_t>(k)], p.eval(xs[static_cast<std::size_t>(k)])});
    CHECK(interpolate(pts, bound) == p);
  }
}

TEST_CASE("ring axioms") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const QPoly a = random_poly(rng, 5);
    const QPoly b = random_poly(rng, 5);
    const QPoly c = random_poly(rng, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == QPoly());
    CHECK((a * b).eval(3) == a.eval(3) * b.eval(3));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant({{BigInt(2), BigInt(1)}, {BigInt(1), BigInt(1)}}) == 1);
  CHECK(determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}) == -1);
  CHECK(determinant({{BigInt(1), BigInt(2), BigInt(3)}, {BigInt(4), BigInt(5), BigInt(6)}, {BigInt(7), BigInt(8), BigInt(9)}}) == 0);
  CHECK(determinant({}) == 1);
}
