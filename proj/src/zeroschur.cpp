#include "flagschur/zeroschur.hpp"

#include "flagschur/io.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace flagschur {

Composition Token::left_type() const {
  switch (kind) {
    case TokenKind::E:
      if (auto t = d.shifted(i, i + 1)) return *t;
      break;
    case TokenKind::F:
      if (auto t = d.shifted(i + 1, i)) return *t;
      break;
    case TokenKind::K:
      return d;
  }
  throw std::invalid_argument("token " + to_string() + " is zero");
}

OrbitMatrix Token::matrix() const {
  std::optional<OrbitMatrix> m;
  switch (kind) {
    case TokenKind::E:
      m = e_generator(i, d);
      break;
    case TokenKind::F:
      m = f_generator(i, d);
      break;
    case TokenKind::K:
      m = OrbitMatrix::diagonal(d);
      break;
  }
  if (!m) throw std::invalid_argument("token " + to_string() + " is zero");
  return *m;
}

std::string Token::to_string() const {
  switch (kind) {
    case TokenKind::E:
      return "E(" + std::to_string(i) + ",(" + d.to_string() + "))";
    case TokenKind::F:
      return "F(" + std::to_string(i) + ",(" + d.to_string() + "))";
    case TokenKind::K:
      break;
  }
  return "K((" + d.to_string() + "))";
}

std::string to_string(const GeneratorWord& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) s += ",";
    s += w[k].to_string();
  }
  return s + "]";
}

std::optional<OrbitMatrix> star_generator(const Token& tok, const OrbitMatrix& a) {
  if (tok.d.n() != a.n() || tok.d != a.row_type()) return std::nullopt;
  const int n = a.n();
  const int i = tok.i;
  switch (tok.kind) {
    case TokenKind::K:
      return a;
    case TokenKind::E: {
      if (i < 1 || i >= n) return std::nullopt;
      for (int p = n; p >= 1; --p) {
        if (a(i + 1, p) > 0) return a.moved(i, p, i + 1, p);
      }
      return std::nullopt;
    }
    case TokenKind::F: {
      if (i < 1 || i >= n) return std::nullopt;
      for (int p = 1; p <= n; ++p) {
        if (a(i, p) > 0) return a.moved(i + 1, p, i, p);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

GeneratorWord word_decompose(const OrbitMatrix& a) {
  std::vector<Segment> upper = upper_segments(a).summands();
  std::vector<Segment> lower = lower_segments(a).summands();
  std::sort(upper.begin(), upper.end(), segment_less);
  std::sort(lower.begin(), lower.end(), segment_less);
  std::vector<std::pair<TokenKind, int>> letters;
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) {
    for (int v = it->lo; v <= it->hi; ++v) letters.emplace_back(TokenKind::E, v);
  }
  for (const auto& s : lower) {
    for (int v = s.hi; v >= s.lo; --v) letters.emplace_back(TokenKind::F, v);
  }
  if (letters.empty()) return {Token{TokenKind::K, 0, a.col_type()}};
  GeneratorWord w(letters.size());
  Composition t = a.col_type();
  for (std::size_t k = letters.size(); k-- > 0;) {
    const auto [kind, i] = letters[k];
    if (i >= a.n()) throw std::logic_error("word_decompose: segment reaches the last vertex");
    w[k] = Token{kind, i, t};
    const bool ok = kind == TokenKind::E ? t(i + 1) > 0 : t(i) > 0;
    if (!ok) throw std::logic_error("word_decompose: token " + w[k].to_string() + " is zero");
    t = w[k].left_type();
  }
  if (t != a.row_type()) throw std::logic_error("word_decompose: word ends at the wrong type");
  return w;
}

std::optional<OrbitMatrix> fold(const GeneratorWord& w, const OrbitMatrix& start) {
  std::optional<OrbitMatrix> cur = start;
  for (auto it = w.rbegin(); it != w.rend() && cur; ++it) cur = star_generator(*it, *cur);
  return cur;
}

std::optional<OrbitMatrix> star(const OrbitMatrix& a, const OrbitMatrix& b) {
  if (a.n() != b.n() || a.r() != b.r()) throw std::invalid_argument("star: operands from different algebras");
  if (a.col_type() != b.row_type()) return std::nullopt;
  return fold(word_decompose(a), b);
}

IntElement star(const IntElement& x, const IntElement& y) {
  if (x.n() != y.n() || x.r() != y.r()) throw std::invalid_argument("star: operands from different algebras");
  IntElement out(x.n(), x.r());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      if (auto m = star(a, b)) out.add(*m, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool deg_leq(const OrbitMatrix& m, const OrbitMatrix& nmat) {
  if (m.n() != nmat.n() || m.row_type() != nmat.row_type() || m.col_type() != nmat.col_type()) return false;
  const auto rm = rank_matrix(m);
  const auto rn = rank_matrix(nmat);
  for (std::size_t k = 0; k < rm.size(); ++k)
    if (rm[k] > rn[k]) return false;
  return true;
}

std::vector<OrbitMatrix> degeneration_closure(const OrbitMatrix& m) {
  // Line pairs (a,b) and (c,e) listed with b <= e and a > c become (c,b) and
  // (a,e): a transposition of i-entries in the j-sorted listing.
  const int n = m.n();
  std::set<OrbitMatrix> seen{m};
  std::deque<OrbitMatrix> todo{m};
  while (!todo.empty()) {
    const OrbitMatrix x = todo.front();
    todo.pop_front();
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        if (x(a, b) == 0) continue;
        for (int c = 1; c < a; ++c) {
          for (int e = b + 1; e <= n; ++e) {
            if (x(c, e) == 0) continue;
            auto y = x.moved(c, b, a, b);
            y = y ? y->moved(a, e, c, e) : y;
            if (y && seen.insert(*y).second) todo.push_back(*y);
          }
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool deg_leq_moves(const OrbitMatrix& m, const OrbitMatrix& nmat) {
  if (m.n() != nmat.n() || m.row_type() != nmat.row_type() || m.col_type() != nmat.col_type()) return false;
  const auto closure = degeneration_closure(m);
  return std::binary_search(closure.begin(), closure.end(), nmat);
}

namespace {

std::vector<int> ascending_sequence(const Composition& d) {
  std::vector<int> seq;
  for (int i = 1; i <= d.n(); ++i)
    for (int k = 0; k < d(i); ++k) seq.push_back(i);
  return seq;
}

OrbitMatrix pair_orbit(const Composition& d, const Composition& e, bool descending) {
  if (d.n() != e.n() || d.r() != e.r()) throw std::invalid_argument("orbit: types of different shapes");
  std::vector<int> is = ascending_sequence(d);
  const std::vector<int> js = ascending_sequence(e);
  if (descending) std::reverse(is.begin(), is.end());
  std::vector<LinePair> pairs;
  for (std::size_t l = 0; l < js.size(); ++l) pairs.push_back({is[l], js[l]});
  return matrix_from_pairs(LinePairs(d.n(), std::move(pairs)));
}

}  // namespace

OrbitMatrix open_orbit(const Composition& d, const Composition& e) { return pair_orbit(d, e, true); }

OrbitMatrix closed_orbit(const Composition& d, const Composition& e) { return pair_orbit(d, e, false); }

std::optional<OrbitMatrix> open_orbit_oracle(const OrbitMatrix& a, const OrbitMatrix& b) {
  if (a.col_type() != b.row_type()) return std::nullopt;
  const Element prod = multiply_basis(a, b);
  std::vector<OrbitMatrix> minima;
  for (const auto& [x, cx] : prod.terms()) {
    bool minimal = true;
    for (const auto& [y, cy] : prod.terms()) minimal = minimal && deg_leq(x, y);
    if (minimal) minima.push_back(x);
  }
  if (minima.size() != 1) {
    throw std::logic_error("open_orbit_oracle: support of e[" + matrix_text(a) + "] e[" + matrix_text(b) +
                           "] has no unique <=deg-minimal orbit");
  }
  return minima.front();
}

OrbitMatrix sigma_twist(const std::vector<int>& sigma, const OrbitMatrix& base) {
  const LinePairs pairs = pairs_from_matrix(base);
  const int r = pairs.r();
  if (static_cast<int>(sigma.size()) != r) throw std::invalid_argument("sigma_twist: permutation has the wrong size");
  std::vector<bool> hit(static_cast<std::size_t>(r), false);
  for (int s : sigma) {
    if (s < 1 || s > r || hit[static_cast<std::size_t>(s - 1)]) {
      throw std::invalid_argument("sigma_twist: not a permutation");
    }
    hit[static_cast<std::size_t>(s - 1)] = true;
  }
  std::vector<LinePair> out;
  for (int l = 0; l < r; ++l) {
    out.push_back({pairs[static_cast<std::size_t>(sigma[static_cast<std::size_t>(l)] - 1)].i,
                   pairs[static_cast<std::size_t>(l)].j});
  }
  return matrix_from_pairs(LinePairs(base.n(), std::move(out)));
}

OrbitMatrix omega(const OrbitMatrix& a) { return open_orbit(a.row_type(), a.col_type()); }

OrbitMatrix phi_embed(const std::vector<OrbitMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("phi_embed: no blocks");
  int n = 0;
  for (const auto& b : blocks) {
    if (b.n() < 1) throw std::invalid_argument("phi_embed: empty block");
    n += b.n();
  }
  std::vector<int> entries(static_cast<std::size_t>(n * n), 0);
  int offset = 0;
  for (const auto& b : blocks) {
    for (int i = 1; i <= b.n(); ++i)
      for (int j = 1; j <= b.n(); ++j)
        entries[static_cast<std::size_t>((offset + i - 1) * n + offset + j - 1)] = b(i, j);
    offset += b.n();
  }
  return OrbitMatrix(n, std::move(entries));
}

OrbitMatrix nested_idempotent(const Composition& d, const Composition& nbar) {
  if (nbar.r() != d.n()) throw std::invalid_argument("nested_idempotent: nbar must be a composition of n");
  std::vector<OrbitMatrix> blocks;
  int start = 0;
  for (int part : nbar.parts()) {
    if (part < 1) throw std::invalid_argument("nested_idempotent: nbar parts must be positive");
    std::vector<int> slice(d.parts().begin() + start, d.parts().begin() + start + part);
    const Composition s(std::move(slice));
    blocks.push_back(open_orbit(s, s));
    start += part;
  }
  return phi_embed(blocks);
}

IntElement psi_image(const OrbitMatrix& a) {
  static std::mutex mu;
  static std::map<OrbitMatrix, IntElement> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
  }
  const GeneratorWord w = word_decompose(a);
  Element cur = Element::basis(OrbitMatrix::diagonal(a.col_type()));
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->kind == TokenKind::K) continue;
    cur = multiply(Element::basis(it->matrix()), cur);
  }
  IntElement out = specialize(cur, 0);
  std::lock_guard lock(mu);
  cache.emplace(a, out);
  return out;
}

// ---------------------------------------------------------------------------

IntElement evaluate_relation_0(const RelationInstance<BigInt>& rel, int n, int r) {
  IntElement out(n, r);
  for (const auto& term : rel.paths) {
    auto end = path_end(term.letters, rel.d);
    if (!end || *end != rel.target) continue;
    std::optional<OrbitMatrix> cur = OrbitMatrix::diagonal(rel.d);
    Composition t = rel.d;
    for (auto it = term.letters.rbegin(); it != term.letters.rend() && cur; ++it) {
      const Token tok{it->kind == 'E' ? TokenKind::E : TokenKind::F, it->i, t};
      cur = star_generator(tok, *cur);
      t = tok.left_type();
    }
    if (!cur) throw std::logic_error("relation path " + letters_to_string(term.letters) + " vanished in G");
    out.add(*cur, term.coeff);
  }
  if (rel.k_coeff != 0 && rel.target == rel.d) out.add(OrbitMatrix::diagonal(rel.d), rel.k_coeff);
  return out;
}

Report verify_relations_0(int n, int r, CommutatorForm form, bool flip_lambda) {
  Report rep;
  rep.suite = "zero-relations n=" + std::to_string(n) + " r=" + std::to_string(r);
  for (const auto& rel : relations_0(n, r, form, flip_lambda)) {
    const IntElement residual = evaluate_relation_0(rel, n, r);
    rep.add(rel.name, residual.is_zero(), residual.is_zero() ? "" : "residual " + to_string(residual));
  }
  return rep;
}

int rank_over_q(const std::vector<IntElement>& xs) {
  std::map<OrbitMatrix, std::size_t> index;
  for (const auto& x : xs)
    for (const auto& [a, c] : x.terms()) index.emplace(a, 0);
  std::size_t k = 0;
  for (auto& [a, idx] : index) idx = k++;
  std::vector<std::vector<BigRational>> rows;
  for (const auto& x : xs) {
    std::vector<BigRational> row(index.size());
    for (const auto& [a, c] : x.terms()) row[index[a]] = BigRational(c);
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t col = 0; col < index.size() && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t sel = static_cast<std::size_t>(rank);
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[static_cast<std::size_t>(rank)]);
    const auto& piv = rows[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const BigRational f = rows[i][col] / piv[col];
      for (std::size_t j = col; j < index.size(); ++j) rows[i][j] -= f * piv[j];
    }
    ++rank;
  }
  return rank;
}

Report preprojective_check(int r) {
  if (r < 2) throw std::invalid_argument("preprojective_check: needs r >= 2");
  const int n = 2;
  Report rep;
  rep.suite = "preprojective n=2 r=" + std::to_string(r);
  const auto types = compositions(n, r);
  auto basis = [](const OrbitMatrix& a) { return IntElement::basis(a, BigInt(1)); };
  auto o = [&](const Composition& d, const Composition& e) { return basis(open_orbit(d, e)); };
  auto kbar = [&](const Composition& d) { return basis(OrbitMatrix::diagonal(d)) - o(d, d); };
  // ebar_d = e_{1,d} - o_{d+a1-a2,d}; fbar_d = f_{1,d} - o_{d-a1+a2,d}; zero when the arrow is.
  auto ebar = [&](const Composition& d) -> IntElement {
    auto g = e_generator(1, d);
    if (!g) return IntElement(n, r);
    return basis(*g) - o(g->row_type(), d);
  };
  auto fbar = [&](const Composition& d) -> IntElement {
    auto g = f_generator(1, d);
    if (!g) return IntElement(n, r);
    return basis(*g) - o(g->row_type(), d);
  };
  const IntElement zero(n, r);
  IntElement kbar_sum(n, r);
  for (const auto& d : types) kbar_sum += kbar(d);

  for (const auto& d : types) {
    for (const auto& e : types) {
      const IntElement prod = star(kbar(d), kbar(e));
      const IntElement expect = d == e ? kbar(d) : zero;
      rep.add("kbar(" + d.to_string() + ")*kbar(" + e.to_string() + ")", prod == expect, to_string(prod));
    }
    rep.add("o*kbar at (" + d.to_string() + ")",
            star(o(d, d), kbar(d)).is_zero() && star(kbar(d), o(d, d)).is_zero());
  }
  for (const auto& d : types) {
    // The generators live in the complement block.
    for (const IntElement& g : {ebar(d), fbar(d)}) {
      const IntElement sandwiched = star(star(kbar_sum, g), kbar_sum);
      rep.add("generator at (" + d.to_string() + ") lies in the complement", sandwiched == g, to_string(g));
    }
    // Preprojective relation at vertex d.
    IntElement rel(n, r);
    if (auto fd = f_generator(1, d)) rel += star(ebar(fd->row_type()), fbar(d));
    if (auto ed = e_generator(1, d)) rel -= star(fbar(ed->row_type()), ebar(d));
    rep.add("preprojective relation at (" + d.to_string() + ")", rel.is_zero(), to_string(rel));
  }

  const int m = r - 1;
  const int expected = m * (m + 1) * (m + 2) / 6;
  std::vector<IntElement> block;
  for (const auto& a : orbit_matrices(n, r)) block.push_back(star(star(kbar_sum, basis(a)), kbar_sum));
  const int block_rank = rank_over_q(block);
  rep.add("complement block dimension", block_rank == expected,
          std::to_string(block_rank) + " vs " + std::to_string(expected));
  const int total = static_cast<int>(orbit_matrices(n, r).size());
  const int matrix_block = static_cast<int>(types.size() * types.size());
  rep.add("dimension count", total - matrix_block == expected,
          std::to_string(total) + " - " + std::to_string(matrix_block));

  // Subalgebra generated by the barred generators.
  std::vector<IntElement> gens;
  for (const auto& d : types) {
    if (!ebar(d).is_zero()) gens.push_back(ebar(d));
    if (!fbar(d).is_zero()) gens.push_back(fbar(d));
  }
  std::vector<IntElement> span;
  for (const auto& d : types)
    if (!kbar(d).is_zero()) span.push_back(kbar(d));
  std::vector<IntElement> frontier = span;
  int rank = rank_over_q(span);
  while (!frontier.empty()) {
    std::vector<IntElement> next;
    for (const auto& g : gens) {
      for (const auto& x : frontier) {
        IntElement y = star(g, x);
        if (y.is_zero()) continue;
        span.push_back(y);
        const int nr = rank_over_q(span);
        if (nr > rank) {
          rank = nr;
          next.push_back(std::move(y));
        } else {
          span.pop_back();
        }
      }
    }
    frontier = std::move(next);
  }
  rep.add("generated subalgebra dimension", rank == expected,
          std::to_string(rank) + " vs " + std::to_string(expected));
  return rep;
}

std::string hasse_dot(const Composition& d, const Composition& e) {
  const auto nodes = orbit_matrices(d, e);
  std::ostringstream os;
  os << "digraph deg {\n  node [shape=box];\n";
  for (const auto& x : nodes) os << "  \"" << matrix_text(x) << "\";\n";
  for (const auto& x : nodes) {
    for (const auto& y : nodes) {
      if (x == y || !deg_leq(x, y)) continue;
      bool cover = true;
      for (const auto& z : nodes) {
        if (z == x || z == y) continue;
        if (deg_leq(x, z) && deg_leq(z, y)) {
          cover = false;
          break;
        }
      }
      if (cover) os << "  \"" << matrix_text(x) << "\" -> \"" << matrix_text(y) << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace flagschur
