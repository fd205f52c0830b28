#include "flagschur/fq.hpp"
#include "flagschur/polyq.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace flagschur;

namespace {

FqVec vec(std::initializer_list<int> xs) {
  FqVec v{};
  std::size_t k = 0;
  for (int x : xs) v[k++] = static_cast<std::uint8_t>(x);
  return v;
}

FqFlag line_flag(int p, FqVec line) {
  return FqFlag({FqSubspace::span(p, 2, std::vector<FqVec>{line}), FqSubspace::whole(p, 2)});
}

std::int64_t gl_order(int m, std::int64_t q) {
  std::int64_t out = 1;
  std::int64_t qm = 1;
  for (int k = 0; k < m; ++k) qm *= q;
  std::int64_t qk = 1;
  for (int k = 0; k < m; ++k) {
    out *= qm - qk;
    qk *= q;
  }
  return out;
}

// Stabilizer of a flag pair in orbit A: maps sending each basis line into
// the lines that enter both flags no later, invertible on the diagonal
// classes. Its dimension counts pairs of entries comparable in both indices.
std::int64_t stabilizer_order(const OrbitMatrix& a, std::int64_t q) {
  const int n = a.n();
  std::int64_t dim = 0;
  std::int64_t out = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= i; ++k)
        for (int l = 1; l <= j; ++l) dim += a(i, j) * a(k, l);
      dim -= a(i, j) * a(i, j);
      out *= gl_order(a(i, j), q);
    }
  }
  for (std::int64_t k = 0; k < dim; ++k) out *= q;
  return out;
}

}  // namespace

TEST_CASE("subspaces are canonical") {
  const int p = 3;
  const auto a = FqSubspace::span(p, 3, std::vector<FqVec>{vec({1, 2, 0}), vec({0, 1, 1})});
  const auto b = FqSubspace::span(p, 3, std::vector<FqVec>{vec({1, 0, 1}), vec({2, 1, 2})});
  CHECK(a.dim() == 2);
  CHECK(a.contains(vec({1, 0, 1})));
  CHECK((a == b) == b.contains(a));
  CHECK(a.intersect(FqSubspace::whole(p, 3)) == a);
  CHECK(a.sum(FqSubspace(p, 3)) == a);
  const auto x = FqSubspace::span(p, 3, std::vector<FqVec>{vec({1, 0, 0})});
  const auto y = FqSubspace::span(p, 3, std::vector<FqVec>{vec({0, 1, 0})});
  CHECK(x.sum(y).dim() == 2);
  CHECK(x.intersect(y).dim() == 0);
  CHECK(enumerate_subspaces(2, 3, 1).size() == 7);
  CHECK(enumerate_subspaces(3, 4, 2).size() == 130);
  CHECK(subspaces_containing(x, 2).size() == 4);
  CHECK(subspaces_between(x, x.sum(y), 2).size() == 1);
  CHECK(subspaces_between(FqSubspace(p, 3), x.sum(y), 1).size() == 4);
}

TEST_CASE("flag enumeration counts") {
  CHECK(enumerate_flags(2, Composition({1, 1})).size() == 3);
  CHECK(enumerate_flags(3, Composition({2, 0})).size() == 1);
  CHECK(enumerate_flags(2, Composition({1, 1, 1})).size() == 21);
  for (int p : {2, 3, 5}) {
    for (const auto& d : compositions(3, 3)) {
      CHECK(BigInt(enumerate_flags(p, d).size()) == gaussian_multinomial(d.parts()).eval(p));
    }
  }
  CHECK_THROWS_AS(FqFlag({FqSubspace::span(2, 2, std::vector<FqVec>{vec({1, 0})})}), std::invalid_argument);
}

TEST_CASE("relative position examples") {
  const FqFlag f = line_flag(2, vec({1, 0}));
  const FqFlag g = line_flag(2, vec({0, 1}));
  CHECK(relative_position(f, g) == OrbitMatrix{{0, 1}, {1, 0}});
  CHECK(relative_position(f, f) == OrbitMatrix{{1, 0}, {0, 1}});
  const FqFlag whole({FqSubspace::whole(2, 2), FqSubspace::whole(2, 2)});
  CHECK(relative_position(f, whole) == OrbitMatrix{{1, 0}, {1, 0}});
}

TEST_CASE("orbit recovery and GL invariance") {
  std::mt19937_64 rng(17);
  for (int p : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      for (int r = 1; r <= 3; ++r) {
        for (const auto& a : orbit_matrices(n, r)) {
          const auto [f, g] = standard_flag_pair(a, p);
          CHECK(f.type() == a.row_type());
          CHECK(g.type() == a.col_type());
          CHECK(relative_position(f, g) == a);
          CHECK(relative_position_by_ranks(f, g) == a);
          const FqMatrix m = random_invertible(p, r, rng);
          CHECK(relative_position(f.transformed(m), g.transformed(m)) == a);
        }
      }
    }
  }
}

TEST_CASE("orbit sizes match the stabilizer formula") {
  for (int p : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      for (int r = 1; r <= 3; ++r) {
        for (const auto& d : compositions(n, r)) {
          for (const auto& e : compositions(n, r)) {
            std::map<OrbitMatrix, std::int64_t> sizes;
            const auto gs = enumerate_flags(p, e);
            for (const auto& f : enumerate_flags(p, d))
              for (const auto& g : gs) ++sizes[relative_position_by_ranks(f, g)];
            for (const auto& a : orbit_matrices(d, e)) {
              CHECK(sizes[a] * stabilizer_order(a, p) == gl_order(r, p));
            }
            CHECK(sizes.size() == orbit_matrices(d, e).size());
          }
        }
      }
    }
  }
}

TEST_CASE("middle flag counts") {
  const OrbitMatrix a{{1, 0}, {1, 0}};
  const OrbitMatrix a2{{1, 1}, {0, 0}};
  CHECK(count_middle_flags(a, a2, OrbitMatrix{{0, 1}, {1, 0}}, 2) == 1);
  CHECK(count_middle_flags(a, a2, OrbitMatrix{{1, 0}, {0, 1}}, 2) == 1);
  CHECK(count_middle_flags(a, a2, OrbitMatrix{{0, 0}, {1, 1}}, 2) == 0);

  // Any representative of the outer orbit gives the same count.
  std::mt19937_64 rng(3);
  for (const auto& a3 : orbit_matrices(2, 3)) {
    for (const auto& x : orbit_matrices(a3.row_type(), Composition({1, 2}))) {
      for (const auto& y : orbit_matrices(Composition({1, 2}), a3.col_type())) {
        const auto base = count_middle_flags(x, y, a3, 3);
        auto [f1, f2] = standard_flag_pair(a3, 3);
        for (int t = 0; t < 3; ++t) {
          const FqMatrix g = random_invertible(3, 3, rng);
          CHECK(count_middle_flags(x, y, f1.transformed(g), f2.transformed(g)) == base);
        }
      }
    }
  }
}

TEST_CASE("nested count agrees with the full count") {
  for (int p : {2, 3}) {
    for (int n = 2; n <= 3; ++n) {
      for (const auto& a3 : orbit_matrices(n, 3)) {
        if (!a3.is_upper()) continue;
        for (const auto& e : compositions(n, 3)) {
          for (const auto& x : orbit_matrices(a3.row_type(), e)) {
            if (!x.is_upper()) continue;
            for (const auto& y : orbit_matrices(e, a3.col_type())) {
              if (!y.is_upper()) continue;
              CHECK(count_nested_middle_flags(x, y, a3, p) == count_middle_flags(x, y, a3, p));
            }
          }
        }
      }
    }
  }
  CHECK_THROWS(count_nested_middle_flags(OrbitMatrix{{0, 1}, {1, 0}}, OrbitMatrix{{1, 0}, {0, 1}},
                                         OrbitMatrix{{0, 1}, {1, 0}}, 2));
}

TEST_CASE("submodule counts") {
  const QuiverRep m12(2, {{1, 2}});
  const QuiverRep s1(2, {{1, 1}});
  const QuiverRep s2(2, {{2, 2}});
  for (int p : {2, 3, 5}) {
    CHECK(count_submodules(m12, s1, s2, p) == 1);
    CHECK(count_submodules(m12, s2, s1, p) == 0);
  }
  CHECK(count_submodules(QuiverRep(2, {{1, 1}, {1, 1}}), s1, s1, 2) == 3);
  CHECK(count_submodules(QuiverRep(2, {{1, 1}, {1, 1}}), s1, s1, 3) == 4);
}

TEST_CASE("resource guard") {
  CHECK_THROWS_AS(check_desk_scale(5), ResourceLimitError);
  CHECK_NOTHROW(check_desk_scale(5, true));
  CHECK_NOTHROW(check_desk_scale(4));
  CHECK_THROWS(require_supported_prime(23));
  CHECK_THROWS(require_supported_prime(4));
}
