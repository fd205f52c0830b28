#include "flagschur/qschur.hpp"

#include "flagschur/io.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <tuple>

namespace flagschur {

namespace {

std::atomic<std::uint64_t> g_interpolations{0};
std::atomic<std::uint64_t> g_held_out{0};
std::atomic<std::uint64_t> g_flag_evals{0};
std::atomic<bool> g_allow_large{false};

template <class Coeff>
std::string element_string(const BasicElement<Coeff>& x, auto coeff_str) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [a, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + coeff_str(c) + ")e[" + matrix_text(a) + "]";
  }
  return s;
}

}  // namespace

std::string to_string(const Element& x) {
  return element_string(x, [](const QPoly& c) { return c.to_string(); });
}

std::string to_string(const IntElement& x) {
  return element_string(x, [](const BigInt& c) { return c.str(); });
}

Element identity_element(int n, int r) {
  Element x(n, r);
  for (const auto& d : compositions(n, r)) x.add(OrbitMatrix::diagonal(d), QPoly(1));
  return x;
}

IntegrityStats integrity_stats() { return {g_interpolations.load(), g_held_out.load(), g_flag_evals.load()}; }

void reset_integrity_stats() {
  g_interpolations = 0;
  g_held_out = 0;
  g_flag_evals = 0;
}

int prime_limit() {
  const char* env = std::getenv("SCHUR_PRIME_LIMIT");
  if (env == nullptr || *env == '\0') return 19;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 2) {
    throw std::invalid_argument(std::string("SCHUR_PRIME_LIMIT must be an integer >= 2, got '") + env + "'");
  }
  return static_cast<int>(std::min<long>(v, 1000));
}

std::vector<int> oracle_primes(int count) {
  const int limit = prime_limit();
  std::vector<int> out;
  for (int p : supported_primes()) {
    if (static_cast<int>(out.size()) == count) break;
    if (p <= limit) out.push_back(p);
  }
  if (static_cast<int>(out.size()) < count) {
    throw ResourceLimitError("need " + std::to_string(count) + " primes but only " + std::to_string(out.size()) +
                             " supported primes are <= " + std::to_string(limit));
  }
  return out;
}

void set_allow_large(bool allow) { g_allow_large = allow; }
bool allow_large() { return g_allow_large.load(); }

int structure_degree_bound(const Composition& e) {
  int bound = 0;
  for (int i = 1; i <= e.n(); ++i)
    for (int j = i + 1; j <= e.n(); ++j) bound += e(i) * e(j);
  return bound;
}

// ---------------------------------------------------------------------------

namespace {

using MatrixPair = std::pair<OrbitMatrix, OrbitMatrix>;

struct Block {
  std::map<MatrixPair, std::vector<std::pair<OrbitMatrix, QPoly>>> products;
};

using BlockKey = std::tuple<Composition, Composition, Composition>;

// Every g_{A,A',A''} with A in (d,e), A' in (e,f), A'' in (d,f). For each
// A'' the standard representative (f1, f2) is fixed and every flag f of
// type e is classified by (relpos(f1, f), relpos(f, f2)); repeating at
// several primes and interpolating yields all constants of the block.
Block compute_block(const Composition& d, const Composition& e, const Composition& f) {
  const int n = d.n();
  const int r = d.r();
  check_desk_scale(r, allow_large());
  const int bound = structure_degree_bound(e);
  const std::vector<int> primes = oracle_primes(bound + 2);
  const std::uint64_t base = static_cast<std::uint64_t>(r + 1);
  {
    // n^2 entries in base r+1 must fit into a 64-bit key.
    long double bits = 0;
    for (int k = 0; k < n * n; ++k) bits += std::log2(static_cast<long double>(base));
    if (bits >= 63) throw ResourceLimitError("orbit matrix keys do not fit in 64 bits");
  }
  const auto targets = orbit_matrices(d, f);
  const std::size_t nn = static_cast<std::size_t>(n * n);

  auto key_of = [&](const std::vector<int>& c) {
    auto at = [&](int i, int j) { return (i == 0 || j == 0) ? 0 : c[static_cast<std::size_t>((i - 1) * n + j - 1)]; };
    std::uint64_t key = 0;
    for (int i = n; i >= 1; --i) {
      for (int j = n; j >= 1; --j) {
        const int entry = at(i, j) - at(i - 1, j) - at(i, j - 1) + at(i - 1, j - 1);
        key = key * base + static_cast<std::uint64_t>(entry);
      }
    }
    return key;
  };
  auto unpack = [&](std::uint64_t key) {
    std::vector<int> entries(nn);
    for (std::size_t k = 0; k < nn; ++k) {
      entries[k] = static_cast<int>(key % base);
      key /= base;
    }
    return OrbitMatrix(n, std::move(entries));
  };

  std::map<std::tuple<std::size_t, std::uint64_t, std::uint64_t>, std::vector<std::int64_t>> counts;
  std::vector<int> c1(nn);
  std::vector<int> c2(nn);
  std::uint64_t evals = 0;
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const auto flags = enumerate_flags(primes[pi], e);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const auto [f1, f2] = standard_flag_pair(targets[t], primes[pi]);
      for (const auto& g : flags) {
        intersection_dims(f1, g, c1);
        intersection_dims(g, f2, c2);
        auto& slot = counts[{t, key_of(c1), key_of(c2)}];
        if (slot.empty()) slot.assign(primes.size(), 0);
        ++slot[pi];
        ++evals;
      }
    }
  }
  g_flag_evals += evals;

  Block block;
  std::vector<Point> points(primes.size());
  for (const auto& [key, values] : counts) {
    const auto& [t, ka, ka2] = key;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) points[pi] = {BigInt(primes[pi]), BigInt(values[pi])};
    QPoly g;
    try {
      g = interpolate(points, bound);
    } catch (const InterpolationError& err) {
      throw InterpolationError(std::string(err.what()) + " for A=" + matrix_text(unpack(ka)) +
                               " A'=" + matrix_text(unpack(ka2)) + " A''=" + matrix_text(targets[t]));
    }
    ++g_interpolations;
    g_held_out += primes.size() - static_cast<std::size_t>(bound + 1);
    if (!g.is_zero()) block.products[{unpack(ka), unpack(ka2)}].emplace_back(targets[t], std::move(g));
  }
  return block;
}

std::mutex g_table_mu;
std::map<BlockKey, Block>& table() {
  static std::map<BlockKey, Block> t;
  return t;
}

const Block& block_for(const Composition& d, const Composition& e, const Composition& f) {
  std::lock_guard lock(g_table_mu);
  auto key = std::make_tuple(d, e, f);
  auto it = table().find(key);
  if (it != table().end()) return it->second;
  return table().emplace(std::move(key), compute_block(d, e, f)).first->second;
}

}  // namespace

QPoly structure_constant(const OrbitMatrix& a, const OrbitMatrix& a2, const OrbitMatrix& a3) {
  if (a.n() != a2.n() || a.n() != a3.n() || a.r() != a2.r() || a.r() != a3.r()) return QPoly();
  if (a.col_type() != a2.row_type() || a3.row_type() != a.row_type() || a3.col_type() != a2.col_type()) {
    return QPoly();
  }
  return multiply_basis(a, a2).coeff(a3);
}

int nested_degree_bound(const Composition& d, const Composition& e, const Composition& f) {
  int bound = 0;
  int t = 0;
  int s = 0;
  int w = 0;
  for (int k = 1; k < d.n(); ++k) {
    const int prev = w;
    t += d(k);
    s += f(k);
    w += e(k);
    const int base = std::max(prev, s);
    if (w > base && t > w) bound += (w - base) * (t - w);
  }
  return bound;
}

QPoly nested_structure_constant(const OrbitMatrix& a, const OrbitMatrix& a2, const OrbitMatrix& a3) {
  if (a.n() != a2.n() || a.n() != a3.n() || a.r() != a2.r() || a.r() != a3.r()) return QPoly();
  if (a.col_type() != a2.row_type() || a3.row_type() != a.row_type() || a3.col_type() != a2.col_type()) {
    return QPoly();
  }
  const int bound = nested_degree_bound(a.row_type(), a.col_type(), a2.col_type());
  const auto primes = oracle_primes(bound + 2);
  std::vector<Point> points;
  for (int p : primes) points.push_back({BigInt(p), BigInt(count_nested_middle_flags(a, a2, a3, p))});
  QPoly g;
  try {
    g = interpolate(points, bound);
  } catch (const InterpolationError& err) {
    throw InterpolationError(std::string(err.what()) + " for A=" + matrix_text(a) + " A'=" + matrix_text(a2) +
                             " A''=" + matrix_text(a3));
  }
  ++g_interpolations;
  g_held_out += primes.size() - static_cast<std::size_t>(bound + 1);
  return g;
}

Element multiply_basis(const OrbitMatrix& a, const OrbitMatrix& b) {
  if (a.n() != b.n() || a.r() != b.r()) throw std::invalid_argument("multiply: operands from different algebras");
  Element out(a.n(), a.r());
  const Composition e = a.col_type();
  if (e != b.row_type()) return out;
  const Block& block = block_for(a.row_type(), e, b.col_type());
  auto it = block.products.find({a, b});
  if (it == block.products.end()) return out;
  for (const auto& [x, g] : it->second) out.add(x, g);
  return out;
}

Element multiply(const Element& x, const Element& y) {
  if (x.n() != y.n() || x.r() != y.r()) throw std::invalid_argument("multiply: operands from different algebras");
  Element out(x.n(), x.r());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      if (a.col_type() != b.row_type()) continue;
      const QPoly c = ca * cb;
      const Element prod = multiply_basis(a, b);
      for (const auto& [m, g] : prod.terms()) out.add(m, g * c);
    }
  }
  return out;
}

IntElement specialize(const Element& x, long long q0) {
  IntElement out(x.n(), x.r());
  for (const auto& [a, c] : x.terms()) out.add(a, c.eval(BigInt(q0)));
  return out;
}

Element lift(const IntElement& x) {
  Element out(x.n(), x.r());
  for (const auto& [a, c] : x.terms()) out.add(a, QPoly(c));
  return out;
}

IntElement multiply_at(const IntElement& x, const IntElement& y, long long q0) {
  return specialize(multiply(lift(x), lift(y)), q0);
}

// ---------------------------------------------------------------------------

std::optional<OrbitMatrix> e_generator(int i, const Composition& d) {
  if (i < 1 || i >= d.n() || d(i + 1) == 0) return std::nullopt;
  return OrbitMatrix::diagonal(d).moved(i, i + 1, i + 1, i + 1);
}

std::optional<OrbitMatrix> f_generator(int i, const Composition& d) {
  if (i < 1 || i >= d.n() || d(i) == 0) return std::nullopt;
  return OrbitMatrix::diagonal(d).moved(i + 1, i, i, i);
}

Element fundamental_mult(GenKind kind, int h, const OrbitMatrix& a) {
  const int n = a.n();
  if (h < 1 || h >= n) throw std::invalid_argument("fundamental_mult: h out of range");
  Element out(n, a.r());
  for (int p = 1; p <= n; ++p) {
    if (kind == GenKind::E) {
      if (a(h + 1, p) == 0) continue;
      int expo = 0;
      for (int j = p + 1; j <= n; ++j) expo += a(h, j);
      out.add(*a.moved(h, p, h + 1, p), QPoly::monomial(1, expo) * quantum_int(a(h, p) + 1));
    } else {
      if (a(h, p) == 0) continue;
      int expo = 0;
      for (int j = 1; j < p; ++j) expo += a(h + 1, j);
      out.add(*a.moved(h + 1, p, h, p), QPoly::monomial(1, expo) * quantum_int(a(h + 1, p) + 1));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

int hall_degree_bound(const QuiverRep& l) {
  int bound = 0;
  for (int dv : l.dim_vector()) bound += dv * (dv - 1) / 2;
  return bound;
}

QPoly hall_number(const QuiverRep& l, const QuiverRep& m, const QuiverRep& nrep) {
  if (l.n() != m.n() || l.n() != nrep.n()) throw std::invalid_argument("hall_number: different quivers");
  const int bound = hall_degree_bound(l);
  const auto primes = oracle_primes(bound + 2);
  std::vector<Point> points;
  for (int p : primes) points.push_back({BigInt(p), BigInt(count_submodules(l, m, nrep, p))});
  QPoly h;
  try {
    h = interpolate(points, bound);
  } catch (const InterpolationError& err) {
    throw InterpolationError(std::string(err.what()) + " for L=" + l.to_string() + " M=" + m.to_string() +
                             " N=" + nrep.to_string());
  }
  ++g_interpolations;
  g_held_out += primes.size() - static_cast<std::size_t>(bound + 1);
  return h;
}

std::vector<QuiverRep> reps_with_dim(int n, const std::vector<int>& dims) {
  if (static_cast<int>(dims.size()) != n) throw std::invalid_argument("reps_with_dim: wrong dimension vector size");
  std::vector<Segment> segs;
  for (int hi = 1; hi <= n; ++hi)
    for (int lo = 1; lo <= hi; ++lo) segs.push_back({lo, hi});
  std::vector<QuiverRep> out;
  std::vector<int> remaining = dims;
  std::vector<Segment> chosen;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == segs.size()) {
      if (std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; })) {
        out.emplace_back(n, chosen);
      }
      return;
    }
    const Segment s = segs[k];
    int most = 1 << 20;
    for (int v = s.lo; v <= s.hi; ++v) most = std::min(most, remaining[static_cast<std::size_t>(v - 1)]);
    for (int m = 0; m <= most; ++m) {
      for (int v = s.lo; v <= s.hi; ++v) remaining[static_cast<std::size_t>(v - 1)] -= m;
      for (int t = 0; t < m; ++t) chosen.push_back(s);
      self(self, k + 1);
      for (int t = 0; t < m; ++t) chosen.pop_back();
      for (int v = s.lo; v <= s.hi; ++v) remaining[static_cast<std::size_t>(v - 1)] += m;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Element theta_plus(const QuiverRep& m, int n, int r) {
  if (m.n() != n) throw std::invalid_argument("theta_plus: representation has the wrong number of vertices");
  Element out(n, r);
  if (static_cast<int>(m.size()) > r) return out;
  std::vector<int> upper(static_cast<std::size_t>(n * n), 0);
  for (const auto& s : m.summands()) {
    if (s.hi >= n) return out;  // quotients of flags vanish at vertex n
    ++upper[static_cast<std::size_t>((s.lo - 1) * n + s.hi)];
  }
  const OrbitMatrix u(n, upper);
  for (const auto& diag : compositions(n, r - static_cast<int>(m.size()))) {
    out.add(u.plus(OrbitMatrix::diagonal(diag)), QPoly(1));
  }
  return out;
}

std::vector<OrbitMatrix> filtration_chain(const OrbitMatrix& a) {
  if (!a.is_upper()) throw std::invalid_argument("filtration_chain: matrix is not upper triangular");
  std::vector<Segment> segs = upper_segments(a).summands();
  std::sort(segs.begin(), segs.end(), segment_less);
  std::vector<OrbitMatrix> chain;
  Composition t = a.col_type();
  for (const auto& s : segs) {
    auto x = OrbitMatrix::diagonal(t).moved(s.lo, s.hi + 1, s.hi + 1, s.hi + 1);
    if (!x) throw std::logic_error("filtration_chain: step leaves the flag types");
    chain.push_back(*x);
    t = *t.shifted(s.lo, s.hi + 1);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

QPoly segment_factorial(const OrbitMatrix& a) {
  QPoly out(1);
  const QuiverRep up = upper_segments(a);
  std::vector<Segment> seen;
  for (const auto& s : up.summands()) {
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
    seen.push_back(s);
    out *= quantum_factorial(up.multiplicity(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::pair<OrbitMatrix, OrbitMatrix> basis_B_factors(const OrbitMatrix& a) {
  const int n = a.n();
  std::vector<int> x1(static_cast<std::size_t>(n * n), 0);
  std::vector<int> x2(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int m = std::min(i, j);
      x1[static_cast<std::size_t>((i - 1) * n + (m - 1))] += a(i, j);
      x2[static_cast<std::size_t>((m - 1) * n + (j - 1))] += a(i, j);
    }
  }
  return {OrbitMatrix(n, std::move(x1)), OrbitMatrix(n, std::move(x2))};
}

Element basis_B_expand(const OrbitMatrix& a) {
  const auto [x1, x2] = basis_B_factors(a);
  return multiply_basis(x1, x2);
}

std::vector<int> join_dims(const OrbitMatrix& a) {
  const int n = a.n();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (std::min(i, j) <= k) out[static_cast<std::size_t>(k - 1)] += a(i, j);
  return out;
}

// ---------------------------------------------------------------------------

Element evaluate_relation(const RelationInstance<QPoly>& rel, int n, int r) {
  Element out(n, r);
  for (const auto& term : rel.paths) {
    auto end = path_end(term.letters, rel.d);
    if (!end || *end != rel.target) continue;
    Element cur = Element::basis(OrbitMatrix::diagonal(rel.d));
    Composition t = rel.d;
    for (auto it = term.letters.rbegin(); it != term.letters.rend(); ++it) {
      auto gen = it->kind == 'E' ? e_generator(it->i, t) : f_generator(it->i, t);
      cur = multiply(Element::basis(*gen), cur);
      t = gen->row_type();
    }
    out += cur.scaled(term.coeff);
  }
  if (!rel.k_coeff.is_zero() && rel.target == rel.d) out.add(OrbitMatrix::diagonal(rel.d), rel.k_coeff);
  return out;
}

Report verify_relations_q(int n, int r, SerreMutation mutation) {
  Report rep;
  rep.suite = "q-relations n=" + std::to_string(n) + " r=" + std::to_string(r);
  for (const auto& rel : relations_q(n, r, mutation)) {
    const Element residual = evaluate_relation(rel, n, r);
    rep.add(rel.name, residual.is_zero(), residual.is_zero() ? "" : "residual " + to_string(residual));
  }
  return rep;
}

}  // namespace flagschur
