#include "flagschur/core.hpp"

#include <doctest.h>

#include <algorithm>

using namespace flagschur;

TEST_CASE("compositions") {
  CHECK(compositions(2, 2).size() == 3);
  CHECK(compositions(3, 3).size() == 10);
  const auto one = compositions(1, 4);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Composition({4}));
  for (const auto& d : compositions(3, 4)) {
    CHECK(d.n() == 3);
    CHECK(d.r() == 4);
  }
  CHECK_THROWS(Composition({1, -1}));
}

TEST_CASE("line pairs round trip") {
  const OrbitMatrix anti{{0, 1}, {1, 0}};
  const auto pairs = pairs_from_matrix(anti);
  REQUIRE(pairs.r() == 2);
  CHECK(std::find(pairs.pairs().begin(), pairs.pairs().end(), LinePair{1, 2}) != pairs.pairs().end());
  CHECK(std::find(pairs.pairs().begin(), pairs.pairs().end(), LinePair{2, 1}) != pairs.pairs().end());
  const auto rep = pairs_from_matrix(OrbitMatrix{{2, 0}, {0, 0}});
  CHECK(rep[0] == LinePair{1, 1});
  CHECK(rep[1] == LinePair{1, 1});

  for (int n = 1; n <= 3; ++n) {
    for (int r = 0; r <= 4; ++r) {
      for (const auto& a : orbit_matrices(n, r)) {
        const auto lp = pairs_from_matrix(a);
        CHECK(matrix_from_pairs(lp) == a);
        std::vector<int> rows(static_cast<std::size_t>(n), 0);
        std::vector<int> cols(static_cast<std::size_t>(n), 0);
        for (const auto& p : lp.pairs()) {
          ++rows[static_cast<std::size_t>(p.i - 1)];
          ++cols[static_cast<std::size_t>(p.j - 1)];
        }
        CHECK(Composition(rows) == a.row_type());
        CHECK(Composition(cols) == a.col_type());
      }
    }
  }
}

TEST_CASE("orbit matrices by block") {
  const Composition d({1, 1});
  const auto block = orbit_matrices(d, d);
  CHECK(block.size() == 2);
  std::size_t total = 0;
  for (const auto& x : compositions(3, 3))
    for (const auto& y : compositions(3, 3)) total += orbit_matrices(x, y).size();
  CHECK(total == orbit_matrices(3, 3).size());
}

TEST_CASE("rank matrix") {
  CHECK(rank_matrix(OrbitMatrix{{0, 1}, {1, 0}}) == std::vector<int>{0, 1, 1, 2});
  CHECK(rank_matrix(OrbitMatrix{{1, 0}, {0, 1}}) == std::vector<int>{1, 1, 1, 2});
  CHECK(rank_matrix(OrbitMatrix(1, {5})) == std::vector<int>{5});
}

TEST_CASE("segment order") {
  CHECK(segment_leq({1, 1}, {1, 2}));
  CHECK(segment_leq({1, 2}, {2, 2}));
  CHECK_FALSE(segment_leq({2, 2}, {1, 2}));
  CHECK(segment_leq({2, 3}, {2, 3}));
  std::vector<Segment> segs;
  for (int hi = 1; hi <= 4; ++hi)
    for (int lo = 1; lo <= hi; ++lo) segs.push_back({lo, hi});
  for (const auto& s : segs) {
    for (const auto& t : segs) {
      CHECK((segment_leq(s, t) || segment_leq(t, s)));
      if (segment_leq(s, t) && segment_leq(t, s)) CHECK(s == t);
      for (const auto& u : segs)
        if (segment_leq(s, t) && segment_leq(t, u)) CHECK(segment_leq(s, u));
    }
  }
}

TEST_CASE("segments of orbit matrices") {
  const OrbitMatrix anti{{0, 1}, {1, 0}};
  CHECK(upper_segments(anti) == QuiverRep(2, {{1, 1}}));
  CHECK(lower_segments(anti) == QuiverRep(2, {{1, 1}}));
  CHECK(upper_segments(OrbitMatrix{{1, 0}, {0, 1}}).size() == 0);
  const OrbitMatrix a13{{0, 0, 1}, {0, 1, 0}, {0, 0, 1}};
  CHECK(upper_segments(a13) == QuiverRep(3, {{1, 2}}));
  CHECK(lower_segments(a13).size() == 0);
}

TEST_CASE("quiver representations") {
  const QuiverRep m(3, {{1, 2}, {2, 2}, {1, 2}});
  CHECK(m.multiplicity({1, 2}) == 2);
  CHECK(m.dim_vector() == std::vector<int>{2, 3, 0});
  CHECK(direct_sum(QuiverRep(3, {{2, 2}}), QuiverRep(3, {{1, 2}, {1, 2}})) == m);
  CHECK_THROWS(QuiverRep(2, {{2, 1}}));
}

TEST_CASE("matrix moves and shapes") {
  const OrbitMatrix a{{1, 0}, {0, 1}};
  const auto m = a.moved(1, 2, 1, 1);
  REQUIRE(m);
  CHECK(*m == OrbitMatrix{{0, 1}, {0, 1}});
  CHECK_FALSE(a.moved(1, 2, 2, 1));
  CHECK(a.is_diagonal());
  CHECK(OrbitMatrix{{1, 1}, {0, 0}}.is_upper());
  CHECK(OrbitMatrix{{0, 1}, {1, 0}}.is_permutation());
  CHECK(OrbitMatrix{{0, 1}, {1, 0}}.transposed() == OrbitMatrix{{0, 1}, {1, 0}});
}
