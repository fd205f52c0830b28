#include "flagschur/suites.hpp"

#include "flagschur/hecke.hpp"
#include "flagschur/io.hpp"
#include "flagschur/qschur.hpp"
#include "flagschur/zeroschur.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

namespace flagschur {

namespace {

std::string tag(int n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

std::string mat(const OrbitMatrix& a) { return "[" + matrix_text(a) + "]"; }

/// Matrices of S(n,r) grouped by row type.
std::map<Composition, std::vector<OrbitMatrix>> by_row_type(int n, int r) {
  std::map<Composition, std::vector<OrbitMatrix>> out;
  for (const auto& a : orbit_matrices(n, r)) out[a.row_type()].push_back(a);
  return out;
}

template <class T>
const T& pick(const std::vector<T>& xs, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, xs.size() - 1);
  return xs[dist(rng)];
}

/// Calls f(A, B) on composable pairs: all of them, or `samples` random ones.
template <class F>
void for_pairs(int n, int r, std::size_t samples, std::uint64_t seed, F f) {
  const auto all = orbit_matrices(n, r);
  const auto rows = by_row_type(n, r);
  if (samples == 0) {
    for (const auto& a : all)
      for (const auto& b : rows.at(a.col_type())) f(a, b);
    return;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const OrbitMatrix& a = pick(all, rng);
    f(a, pick(rows.at(a.col_type()), rng));
  }
}

bool join_below(const std::vector<int>& x, const std::vector<int>& y) {
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] > y[k]) return false;
  return x != y;
}

std::vector<OrbitMatrix> upper_matrices(const Composition& d, const Composition& e) {
  std::vector<OrbitMatrix> out;
  for (const auto& a : orbit_matrices(d, e))
    if (a.is_upper()) out.push_back(a);
  return out;
}

}  // namespace

Report check_example_product() {
  Report rep;
  rep.suite = "example product";
  const OrbitMatrix a{{1, 0}, {1, 0}};
  const OrbitMatrix b{{1, 1}, {0, 0}};
  Element want(2, 2);
  want.add(OrbitMatrix{{0, 1}, {1, 0}}, QPoly(1));
  want.add(OrbitMatrix{{1, 0}, {0, 1}}, QPoly(1));
  const Element got = multiply_basis(a, b);
  rep.add("e[1,0;1,0] e[1,1;0,0]", got == want, to_string(got));
  const Element viab = basis_B_expand(OrbitMatrix{{0, 1}, {1, 0}});
  rep.add("basis_B_expand(0,1;1,0)", viab == want, to_string(viab));
  return rep;
}

Report check_closed_forms(int n, int r) {
  Report rep;
  rep.suite = "closed forms " + tag(n, r);
  for (const auto& a : orbit_matrices(n, r)) {
    for (int h = 1; h < n; ++h) {
      for (GenKind kind : {GenKind::E, GenKind::F}) {
        const auto gen = kind == GenKind::E ? e_generator(h, a.row_type()) : f_generator(h, a.row_type());
        if (!gen) continue;
        const Element counted = multiply_basis(*gen, a);
        const Element closed = fundamental_mult(kind, h, a);
        const std::string name = std::string(kind == GenKind::E ? "E" : "F") + std::to_string(h) + " * " + mat(a);
        rep.add(name, counted == closed, counted == closed ? "" : to_string(counted) + " vs " + to_string(closed));
      }
    }
  }
  return rep;
}

Report check_hall_numbers(int n, int r, const std::vector<Composition>& shifts) {
  Report rep;
  rep.suite = "hall numbers " + tag(n, r);
  const auto comps = compositions(n, r);
  for (const auto& d : comps) {
    for (const auto& e : comps) {
      const auto as = upper_matrices(d, e);
      if (as.empty()) continue;
      for (const auto& f : comps) {
        const auto a2s = upper_matrices(e, f);
        const auto a3s = upper_matrices(d, f);
        for (const auto& a : as) {
          for (const auto& a2 : a2s) {
            for (const auto& a3 : a3s) {
              const QPoly h = hall_number(upper_segments(a3), upper_segments(a), upper_segments(a2));
              const QPoly g = structure_constant(a, a2, a3);
              const std::string name = "g" + mat(a) + mat(a2) + mat(a3);
              rep.add(name, g == h, g == h ? "" : g.to_string() + " vs hall " + h.to_string());
              const QPoly gn = nested_structure_constant(a, a2, a3);
              rep.add(name + " nested count", gn == g, gn == g ? "" : gn.to_string() + " vs " + g.to_string());
              for (const auto& dshift : shifts) {
                if (dshift.n() != n) continue;
                const OrbitMatrix dm = OrbitMatrix::diagonal(dshift);
                const QPoly gs = nested_structure_constant(a.plus(dm), a2.plus(dm), a3.plus(dm));
                rep.add(name + " + diag(" + dshift.to_string() + ")", gs == h,
                        gs == h ? "" : gs.to_string() + " vs hall " + h.to_string());
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

Report check_chain_products(const std::vector<OrbitMatrix>& uppers) {
  Report rep;
  rep.suite = "filtration chains";
  for (const auto& a : uppers) {
    const auto chain = filtration_chain(a);
    Element prod = Element::basis(OrbitMatrix::diagonal(a.row_type()));
    for (const auto& x : chain) prod = multiply(prod, Element::basis(x));
    const Element want = Element::basis(a, segment_factorial(a));
    rep.add("chain " + mat(a), prod == want, prod == want ? "" : to_string(prod) + " vs " + to_string(want));
  }
  return rep;
}

Report check_basis_B(int n, int r) {
  Report rep;
  rep.suite = "basis B " + tag(n, r);
  const auto comps = compositions(n, r);
  for (const auto& d : comps) {
    for (const auto& e : comps) {
      const auto block = orbit_matrices(d, e);
      std::map<OrbitMatrix, std::size_t> index;
      for (std::size_t k = 0; k < block.size(); ++k) index[block[k]] = k;
      std::vector<Element> rows;
      bool triangular = true;
      std::string bad;
      for (const auto& a : block) {
        const Element x = basis_B_expand(a);
        rows.push_back(x);
        const auto ja = join_dims(a);
        for (const auto& [c, coeff] : x.terms()) {
          const bool ok = c == a ? coeff == QPoly(1) : join_below(join_dims(c), ja);
          if (!ok && triangular) bad = mat(a) + " has term " + mat(c);
          triangular = triangular && ok;
        }
      }
      const std::string name = "block " + d.to_string() + " | " + e.to_string();
      rep.add(name + " unitriangular", triangular, bad);
      for (long long q0 : {0LL, 1LL, 2LL}) {
        std::vector<std::vector<BigInt>> m(block.size(), std::vector<BigInt>(block.size()));
        for (std::size_t k = 0; k < rows.size(); ++k)
          for (const auto& [c, coeff] : rows[k].terms()) m[k][index.at(c)] = coeff.eval(BigInt(q0));
        const BigInt det = determinant(m);
        rep.add(name + " det at q=" + std::to_string(q0), det == 1, "det " + det.str());
      }
    }
  }
  return rep;
}

Report check_star_associativity(int n, int r, std::size_t samples, std::uint64_t seed) {
  Report rep;
  rep.suite = "star associativity " + tag(n, r);
  const auto rows = by_row_type(n, r);
  std::size_t failures = 0;
  std::size_t count = 0;
  std::string first;
  auto check = [&](const OrbitMatrix& a, const OrbitMatrix& b, const OrbitMatrix& c) {
    ++count;
    const auto ab = star(a, b);
    const auto bc = star(b, c);
    const auto left = ab ? star(*ab, c) : std::nullopt;
    const auto right = bc ? star(a, *bc) : std::nullopt;
    if (left != right) {
      if (failures++ == 0) first = mat(a) + mat(b) + mat(c);
    }
  };
  if (samples == 0) {
    for_pairs(n, r, 0, seed, [&](const OrbitMatrix& a, const OrbitMatrix& b) {
      for (const auto& c : rows.at(b.col_type())) check(a, b, c);
    });
  } else {
    std::mt19937_64 rng(seed);
    const auto all = orbit_matrices(n, r);
    for (std::size_t k = 0; k < samples; ++k) {
      const OrbitMatrix& a = pick(all, rng);
      const OrbitMatrix& b = pick(rows.at(a.col_type()), rng);
      check(a, b, pick(rows.at(b.col_type()), rng));
    }
  }
  rep.add(std::to_string(count) + " triples", failures == 0,
          failures == 0 ? "" : std::to_string(failures) + " failures, first " + first);
  return rep;
}

Report check_open_orbit(int n, int r, std::size_t samples, std::uint64_t seed) {
  Report rep;
  rep.suite = "open orbit oracle " + tag(n, r);
  for_pairs(n, r, samples, seed, [&](const OrbitMatrix& a, const OrbitMatrix& b) {
    const auto s = star(a, b);
    std::optional<OrbitMatrix> o;
    std::string err;
    try {
      o = open_orbit_oracle(a, b);
    } catch (const std::logic_error& ex) {
      err = ex.what();
    }
    const bool ok = err.empty() && s == o;
    rep.add(mat(a) + " * " + mat(b), ok,
            ok ? "" : err.empty() ? "star " + (s ? matrix_text(*s) : "0") + " vs oracle " + (o ? matrix_text(*o) : "0")
                                  : err);
  });
  return rep;
}

Report check_psi(int n, int r, std::size_t samples, std::uint64_t seed) {
  Report rep;
  rep.suite = "psi " + tag(n, r);
  std::map<OrbitMatrix, IntElement> psi;
  for (const auto& a : orbit_matrices(n, r)) psi.emplace(a, psi_image(a));
  for_pairs(n, r, samples, seed, [&](const OrbitMatrix& a, const OrbitMatrix& b) {
    const auto s = star(a, b);
    const IntElement lhs = s ? psi.at(*s) : IntElement(n, r);
    const IntElement rhs = multiply_at(psi.at(a), psi.at(b), 0);
    rep.add("psi(" + mat(a) + " * " + mat(b) + ")", lhs == rhs, lhs == rhs ? "" : to_string(lhs) + " vs " + to_string(rhs));
  });
  const auto comps = compositions(n, r);
  for (const auto& d : comps) {
    for (const auto& e : comps) {
      const auto block = orbit_matrices(d, e);
      std::map<OrbitMatrix, std::size_t> index;
      for (std::size_t k = 0; k < block.size(); ++k) index[block[k]] = k;
      std::vector<std::vector<BigInt>> m(block.size(), std::vector<BigInt>(block.size()));
      for (std::size_t k = 0; k < block.size(); ++k)
        for (const auto& [c, coeff] : psi.at(block[k]).terms()) m[k][index.at(c)] = coeff;
      const BigInt det = determinant(m);
      rep.add("block " + d.to_string() + " | " + e.to_string() + " det", det == 1 || det == -1, "det " + det.str());
    }
  }
  return rep;
}

Report check_matrix_block(int n, int r) {
  Report rep;
  rep.suite = "matrix block " + tag(n, r);
  const auto comps = compositions(n, r);
  for (const auto& d : comps)
    for (const auto& e : comps)
      for (const auto& f : comps) {
        const auto s = star(open_orbit(d, e), open_orbit(e, f));
        rep.add("o(" + d.to_string() + "|" + e.to_string() + ") * o(" + e.to_string() + "|" + f.to_string() + ")",
                s && *s == open_orbit(d, f));
      }
  for (const auto& d : comps) {
    const IntElement o = IntElement::basis(open_orbit(d, d));
    const IntElement rest = IntElement::basis(OrbitMatrix::diagonal(d)) - o;
    const IntElement zero(n, r);
    const std::string name = "idempotents at " + d.to_string();
    rep.add(name + ": o o = o", star(o, o) == o);
    rep.add(name + ": o (k - o) = 0", star(o, rest) == zero);
    rep.add(name + ": (k - o) o = 0", star(rest, o) == zero);
    rep.add(name + ": (k - o)^2 = k - o", star(rest, rest) == rest);
  }
  const auto all = orbit_matrices(n, r);
  const auto rows = by_row_type(n, r);
  std::size_t omega_bad = 0;
  std::size_t absorb_bad = 0;
  std::size_t ideal_bad = 0;
  for (const auto& a : all) {
    for (const auto& b : rows.at(a.col_type())) {
      const auto ab = star(a, b);
      if (!ab || omega(*ab) != star(omega(a), omega(b))) ++omega_bad;
      const OrbitMatrix o = open_orbit(a.row_type(), a.col_type());
      const auto left = star(o, b);
      if (!left || *left != open_orbit(o.row_type(), b.col_type())) ++ideal_bad;
    }
    for (const auto& e2 : comps) {
      const auto am = star(a, open_orbit(a.col_type(), e2));
      for (const auto& c : rows.at(e2)) {
        const auto amc = am ? star(*am, c) : std::nullopt;
        if (!amc || *amc != open_orbit(a.row_type(), c.col_type())) ++absorb_bad;
      }
    }
  }
  rep.add("omega multiplicative", omega_bad == 0, std::to_string(omega_bad) + " failures");
  rep.add("open orbits form an ideal", ideal_bad == 0, std::to_string(ideal_bad) + " failures");
  rep.add("e_B' * o * e_B = o", absorb_bad == 0, std::to_string(absorb_bad) + " failures");
  return rep;
}

Report check_hecke(int n) {
  Report rep;
  rep.suite = "hecke n=" + std::to_string(n);
  const auto perms = Permutation::all(n);
  std::size_t tsigma_bad = 0;
  for (const auto& s : perms) tsigma_bad += t_sigma(s) == s ? 0 : 1;
  rep.add("t_sigma(sigma) = sigma", tsigma_bad == 0, std::to_string(tsigma_bad) + " failures");
  rep.merge(verify_hecke_relations(n));
  std::size_t oracle_bad = 0;
  for (const auto& x : perms)
    for (const auto& y : perms) oracle_bad += hecke_mult(x, y) == demazure_oracle(x, y) ? 0 : 1;
  rep.add("demazure oracle", oracle_bad == 0, std::to_string(oracle_bad) + " failures");
  std::set<Permutation> idems;
  bool all_idem = true;
  const auto nbars = positive_compositions(n);
  for (const auto& nb : nbars) {
    const Permutation t = t_nbar(nb);
    all_idem = all_idem && hecke_mult(t, t) == t;
    idems.insert(t);
  }
  rep.add("t_nbar idempotent", all_idem);
  rep.add("t_nbar distinct", idems.size() == nbars.size() && nbars.size() == (std::size_t{1} << (n - 1)),
          std::to_string(idems.size()) + " distinct");
  return rep;
}

}  // namespace flagschur
