#include "flagschur/qschur.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>

using namespace flagschur;

namespace {

Element basis(const OrbitMatrix& a, QPoly c = QPoly(1)) { return Element::basis(a, std::move(c)); }

Element sum(std::initializer_list<std::pair<OrbitMatrix, QPoly>> terms, int n, int r) {
  Element x(n, r);
  for (const auto& [a, c] : terms) x.add(a, c);
  return x;
}

}  // namespace

TEST_CASE("example products") {
  const OrbitMatrix anti{{0, 1}, {1, 0}};
  const OrbitMatrix id{{1, 0}, {0, 1}};
  const OrbitMatrix top{{1, 1}, {0, 0}};
  CHECK(multiply_basis(OrbitMatrix{{1, 0}, {1, 0}}, top) == sum({{anti, 1}, {id, 1}}, 2, 2));
  CHECK(multiply_basis(top, anti) == basis(top, QPoly::q()));
  CHECK(multiply_basis(OrbitMatrix::diagonal(Composition({1, 1})), anti) == basis(anti));
  CHECK(multiply_basis(top, top).is_zero());
  CHECK(structure_constant(top, anti, top) == QPoly::q());
  CHECK(structure_constant(top, anti, anti).is_zero());
}

TEST_CASE("identity element") {
  const Element one = identity_element(2, 3);
  for (const auto& a : orbit_matrices(2, 3)) {
    CHECK(multiply(one, basis(a)) == basis(a));
    CHECK(multiply(basis(a), one) == basis(a));
  }
}

TEST_CASE("generators and closed formulas") {
  CHECK(e_generator(1, Composition({1, 1})) == OrbitMatrix{{1, 1}, {0, 0}});
  CHECK_FALSE(e_generator(1, Composition({2, 0})));
  CHECK(f_generator(1, Composition({2, 0})) == OrbitMatrix{{1, 0}, {1, 0}});
  CHECK_FALSE(f_generator(1, Composition({0, 2})));
  CHECK_FALSE(e_generator(2, Composition({1, 1})));

  const OrbitMatrix anti{{0, 1}, {1, 0}};
  const OrbitMatrix top{{1, 1}, {0, 0}};
  CHECK(fundamental_mult(GenKind::E, 1, anti) == basis(top, QPoly::q()));
  CHECK(fundamental_mult(GenKind::F, 1, top) == sum({{anti, 1}, {OrbitMatrix{{1, 0}, {0, 1}}, 1}}, 2, 2));
  CHECK(fundamental_mult(GenKind::E, 1, top).is_zero());

  for (int n = 2; n <= 3; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (const auto& a : orbit_matrices(n, r)) {
        for (int h = 1; h < n; ++h) {
          if (auto g = e_generator(h, a.row_type())) CHECK(multiply_basis(*g, a) == fundamental_mult(GenKind::E, h, a));
          if (auto g = f_generator(h, a.row_type())) CHECK(multiply_basis(*g, a) == fundamental_mult(GenKind::F, h, a));
        }
      }
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(23);
  for (auto [n, r] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const auto all = orbit_matrices(n, r);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 60; ++t) {
      const Element x = basis(all[pick(rng)]) + basis(all[pick(rng)], QPoly::q());
      const Element y = basis(all[pick(rng)]) + basis(all[pick(rng)], quantum_int(2));
      const Element z = basis(all[pick(rng)]);
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
  }
}

TEST_CASE("hall numbers") {
  const QuiverRep m12(2, {{1, 2}});
  const QuiverRep s1(2, {{1, 1}});
  const QuiverRep s2(2, {{2, 2}});
  CHECK(hall_number(m12, s1, s2) == QPoly(1));
  CHECK(hall_number(QuiverRep(2, {{1, 1}, {1, 1}}), s1, s1) == QPoly(std::vector<BigInt>{1, 1}));
  CHECK(hall_number(m12, s2, s1).is_zero());
  CHECK(reps_with_dim(2, {1, 1}).size() == 2);
  CHECK(reps_with_dim(3, {1, 1, 1}).size() == 4);
}

TEST_CASE("theta plus") {
  const QuiverRep s1(2, {{1, 1}});
  CHECK(theta_plus(s1, 2, 2) == sum({{OrbitMatrix{{1, 1}, {0, 0}}, 1}, {OrbitMatrix{{0, 1}, {0, 1}}, 1}}, 2, 2));
  CHECK(theta_plus(QuiverRep(2, {}), 2, 2) == identity_element(2, 2));
  CHECK(theta_plus(QuiverRep(2, {{1, 1}, {1, 1}, {1, 1}}), 2, 2).is_zero());

  // An algebra map from the Hall algebra of the quiver on the first n-1 vertices.
  const int n = 3;
  for (int r = 1; r <= 3; ++r) {
    std::vector<QuiverRep> reps;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b)
        for (const auto& m : reps_with_dim(n, {a, b, 0})) reps.push_back(m);
    for (const auto& m : reps) {
      for (const auto& nrep : reps) {
        const auto dm = m.dim_vector();
        const auto dn = nrep.dim_vector();
        std::vector<int> dl{dm[0] + dn[0], dm[1] + dn[1], 0};
        Element rhs(n, r);
        for (const auto& l : reps_with_dim(n, dl)) {
          const QPoly h = hall_number(l, m, nrep);
          rhs += theta_plus(l, n, r).scaled(h);
        }
        CHECK(multiply(theta_plus(m, n, r), theta_plus(nrep, n, r)) == rhs);
      }
    }
  }
}

TEST_CASE("basis B") {
  const OrbitMatrix anti{{0, 1}, {1, 0}};
  CHECK(basis_B_expand(anti) == sum({{anti, 1}, {OrbitMatrix{{1, 0}, {0, 1}}, 1}}, 2, 2));
  CHECK(basis_B_expand(OrbitMatrix{{1, 1}, {0, 0}}) == basis(OrbitMatrix{{1, 1}, {0, 0}}));
  CHECK(basis_B_expand(OrbitMatrix::diagonal(Composition({2, 1}))) == basis(OrbitMatrix::diagonal(Composition({2, 1}))));
  const auto [x1, x2] = basis_B_factors(anti);
  CHECK(x1 == OrbitMatrix{{1, 0}, {1, 0}});
  CHECK(x2 == OrbitMatrix{{1, 1}, {0, 0}});
  CHECK(join_dims(anti) == std::vector<int>{2, 2});
}

TEST_CASE("filtration chains") {
  const OrbitMatrix a{{0, 2}, {0, 0}};
  CHECK(segment_factorial(a) == quantum_factorial(2));
  const auto chain = filtration_chain(a);
  CHECK(chain.size() == 2);
  Element prod = basis(OrbitMatrix::diagonal(a.row_type()));
  for (const auto& x : chain) prod = multiply(prod, basis(x));
  CHECK(prod == basis(a, quantum_factorial(2)));
  CHECK_THROWS(filtration_chain(OrbitMatrix{{0, 1}, {1, 0}}));
}

TEST_CASE("specialization") {
  const OrbitMatrix a{{0, 1}, {1, 0}};
  CHECK(specialize(basis(a, QPoly::q()), 0).is_zero());
  CHECK(specialize(basis(a, quantum_int(2)), 1) == IntElement::basis(a, BigInt(2)));
  CHECK(specialize(basis(a, quantum_int(3)), 0) == IntElement::basis(a));
  CHECK(lift(IntElement::basis(a, BigInt(5))) == basis(a, QPoly(5)));
}

TEST_CASE("relations in S_q") {
  CHECK(verify_relations_q(2, 2).passed());
  CHECK(verify_relations_q(3, 3).passed());
  // n = 2 has no Serre relations to mutate.
  CHECK(verify_relations_q(2, 2, SerreMutation::MiddleCoefficient).passed());
  CHECK_FALSE(verify_relations_q(3, 3, SerreMutation::MiddleCoefficient).passed());
}

TEST_CASE("prime limit and integrity counters") {
  reset_integrity_stats();
  (void)hall_number(QuiverRep(2, {{1, 1}, {1, 1}}), QuiverRep(2, {{1, 1}}), QuiverRep(2, {{1, 1}}));
  const auto st = integrity_stats();
  CHECK(st.interpolations == 1);
  CHECK(st.held_out_checks == 1);

  CHECK(prime_limit() >= 2);
  ::setenv("SCHUR_PRIME_LIMIT", "5", 1);
  CHECK(prime_limit() == 5);
  CHECK(oracle_primes(3) == std::vector<int>{2, 3, 5});
  CHECK_THROWS_AS(oracle_primes(4), ResourceLimitError);
  ::setenv("SCHUR_PRIME_LIMIT", "oops", 1);
  CHECK_THROWS(prime_limit());
  ::unsetenv("SCHUR_PRIME_LIMIT");
  CHECK(prime_limit() == 19);
  CHECK(structure_degree_bound(Composition({2, 1, 1})) == 5);
}
