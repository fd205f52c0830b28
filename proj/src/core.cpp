#include "flagschur/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagschur {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
  }
  r_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::unit(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("unit vector index out of range");
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  parts[static_cast<std::size_t>(i - 1)] = 1;
  return Composition(std::move(parts));
}

std::optional<Composition> Composition::shifted(int plus, int minus) const {
  std::vector<int> parts = parts_;
  if (plus >= 1 && plus <= n()) ++parts[static_cast<std::size_t>(plus - 1)];
  if (minus >= 1 && minus <= n()) {
    if (--parts[static_cast<std::size_t>(minus - 1)] < 0) return std::nullopt;
  }
  return Composition(std::move(parts));
}

std::string Composition::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) os << ',';
    os << parts_[k];
  }
  return os.str();
}

namespace {

void compositions_rec(int n, int remaining, std::vector<int>& cur,
                      std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur.push_back(v);
    compositions_rec(n, remaining - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int n, int r) {
  if (n < 1) throw std::invalid_argument("compositions: n must be positive");
  if (r < 0) throw std::invalid_argument("compositions: r must be non-negative");
  std::vector<Composition> out;
  std::vector<int> cur;
  compositions_rec(n, r, cur, out);
  return out;
}

// ---------------------------------------------------------------------------

OrbitMatrix::OrbitMatrix(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw std::invalid_argument("orbit matrix size must be positive");
  if (entries_.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("orbit matrix must have n*n entries");
  }
  for (int v : entries_) {
    if (v < 0) throw std::invalid_argument("orbit matrix entries must be non-negative");
  }
  r_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

OrbitMatrix::OrbitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("orbit matrix must be square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  *this = OrbitMatrix(n, std::move(entries));
}

OrbitMatrix OrbitMatrix::diagonal(const Composition& d) {
  const int n = d.n();
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>((i - 1) * n + i - 1)] = d(i);
  return OrbitMatrix(n, std::move(e));
}

OrbitMatrix OrbitMatrix::zero(int n) {
  return OrbitMatrix(n, std::vector<int>(static_cast<std::size_t>(n * n), 0));
}

Composition OrbitMatrix::row_type() const {
  std::vector<int> s(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s[static_cast<std::size_t>(i)] += entries_[static_cast<std::size_t>(i * n_ + j)];
  return Composition(std::move(s));
}

Composition OrbitMatrix::col_type() const {
  std::vector<int> s(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s[static_cast<std::size_t>(j)] += entries_[static_cast<std::size_t>(i * n_ + j)];
  return Composition(std::move(s));
}

bool OrbitMatrix::is_diagonal() const { return is_upper() && is_lower(); }

bool OrbitMatrix::is_upper() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j < i; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

bool OrbitMatrix::is_lower() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

bool OrbitMatrix::is_permutation() const {
  if (r_ != n_) return false;
  return row_type() == Composition(std::vector<int>(static_cast<std::size_t>(n_), 1)) &&
         col_type() == Composition(std::vector<int>(static_cast<std::size_t>(n_), 1));
}

std::optional<OrbitMatrix> OrbitMatrix::moved(int add_i, int add_j, int sub_i, int sub_j) const {
  std::vector<int> e = entries_;
  ++e[static_cast<std::size_t>((add_i - 1) * n_ + add_j - 1)];
  if (--e[static_cast<std::size_t>((sub_i - 1) * n_ + sub_j - 1)] < 0) return std::nullopt;
  return OrbitMatrix(n_, std::move(e));
}

OrbitMatrix OrbitMatrix::plus(const OrbitMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("orbit matrix size mismatch");
  std::vector<int> e = entries_;
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += other.entries_[k];
  return OrbitMatrix(n_, std::move(e));
}

OrbitMatrix OrbitMatrix::transposed() const {
  std::vector<int> e(entries_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      e[static_cast<std::size_t>(j * n_ + i)] = entries_[static_cast<std::size_t>(i * n_ + j)];
  return OrbitMatrix(n_, std::move(e));
}

namespace {

void fill_all(int n, int remaining, std::size_t pos, std::vector<int>& cur,
              std::vector<OrbitMatrix>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(n, cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    fill_all(n, remaining - v, pos + 1, cur, out);
  }
}

// Fills row-major with the row and column budgets left in `rows` / `cols`.
void fill_block(int n, std::size_t pos, std::vector<int>& rows, std::vector<int>& cols,
                std::vector<int>& cur, std::vector<OrbitMatrix>& out) {
  if (pos == cur.size()) {
    out.emplace_back(n, cur);
    return;
  }
  const std::size_t i = pos / static_cast<std::size_t>(n);
  const std::size_t j = pos % static_cast<std::size_t>(n);
  const bool last_col = j + 1 == static_cast<std::size_t>(n);
  const bool last_row = i + 1 == static_cast<std::size_t>(n);
  int lo = 0;
  int hi = std::min(rows[i], cols[j]);
  if (last_col) lo = rows[i];
  if (last_row) lo = std::max(lo, cols[j]);
  if (lo > hi) return;
  if (last_col || last_row) hi = lo;
  for (int v = hi; v >= lo; --v) {
    cur[pos] = v;
    rows[i] -= v;
    cols[j] -= v;
    fill_block(n, pos + 1, rows, cols, cur, out);
    rows[i] += v;
    cols[j] += v;
  }
}

}  // namespace

std::vector<OrbitMatrix> orbit_matrices(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("orbit_matrices: bad (n, r)");
  std::vector<OrbitMatrix> out;
  std::vector<int> cur(static_cast<std::size_t>(n * n), 0);
  fill_all(n, r, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrbitMatrix> orbit_matrices(const Composition& d, const Composition& e) {
  if (d.n() != e.n()) throw std::invalid_argument("orbit_matrices: types of different length");
  std::vector<OrbitMatrix> out;
  if (d.r() != e.r()) return out;
  const int n = d.n();
  std::vector<int> rows = d.parts();
  std::vector<int> cols = e.parts();
  std::vector<int> cur(static_cast<std::size_t>(n * n), 0);
  fill_block(n, 0, rows, cols, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> rank_matrix(const OrbitMatrix& a) {
  const int n = a.n();
  std::vector<int> out(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int v = a(i, j);
      if (i > 1) v += out[static_cast<std::size_t>((i - 2) * n + j - 1)];
      if (j > 1) v += out[static_cast<std::size_t>((i - 1) * n + j - 2)];
      if (i > 1 && j > 1) v -= out[static_cast<std::size_t>((i - 2) * n + j - 2)];
      out[static_cast<std::size_t>((i - 1) * n + j - 1)] = v;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

LinePairs::LinePairs(int n, std::vector<LinePair> pairs) : n_(n), pairs_(std::move(pairs)) {
  for (const auto& p : pairs_) {
    if (p.i < 1 || p.i > n || p.j < 1 || p.j > n) {
      throw std::invalid_argument("line pair index out of range");
    }
  }
  std::stable_sort(pairs_.begin(), pairs_.end(), [](const LinePair& a, const LinePair& b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  });
}

LinePairs pairs_from_matrix(const OrbitMatrix& a) {
  std::vector<LinePair> pairs;
  for (int j = 1; j <= a.n(); ++j)
    for (int i = 1; i <= a.n(); ++i)
      for (int k = 0; k < a(i, j); ++k) pairs.push_back({i, j});
  return LinePairs(a.n(), std::move(pairs));
}

OrbitMatrix matrix_from_pairs(const LinePairs& pairs) {
  const int n = pairs.n();
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (const auto& p : pairs.pairs()) ++e[static_cast<std::size_t>((p.i - 1) * n + p.j - 1)];
  return OrbitMatrix(n, std::move(e));
}

// ---------------------------------------------------------------------------

bool segment_leq(const Segment& s, const Segment& t) {
  return s.hi < t.hi || (s.hi == t.hi && s.lo <= t.lo);
}

bool segment_less(const Segment& s, const Segment& t) { return segment_leq(s, t) && !(s == t); }

QuiverRep::QuiverRep(int n, std::vector<Segment> summands) : n_(n), summands_(std::move(summands)) {
  if (n < 1) throw std::invalid_argument("quiver needs at least one vertex");
  for (const auto& s : summands_) {
    if (s.lo < 1 || s.lo > s.hi || s.hi > n) throw std::invalid_argument("segment out of range");
  }
  std::sort(summands_.begin(), summands_.end(), segment_less);
}

int QuiverRep::multiplicity(const Segment& s) const {
  return static_cast<int>(std::count(summands_.begin(), summands_.end(), s));
}

std::vector<int> QuiverRep::dim_vector() const {
  std::vector<int> d(static_cast<std::size_t>(n_), 0);
  for (const auto& s : summands_)
    for (int v = s.lo; v <= s.hi; ++v) ++d[static_cast<std::size_t>(v - 1)];
  return d;
}

int QuiverRep::rank(int i, int j) const {
  if (i < 1 || j > n_ || i > j) return 0;
  return static_cast<int>(std::count_if(summands_.begin(), summands_.end(),
                                        [&](const Segment& s) { return s.lo <= i && j <= s.hi; }));
}

std::string QuiverRep::to_string() const {
  if (summands_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < summands_.size(); ++k) {
    if (k) os << " + ";
    os << "M[" << summands_[k].lo << ',' << summands_[k].hi << ']';
  }
  return os.str();
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  if (a.n() != b.n()) throw std::invalid_argument("direct_sum: quivers differ");
  std::vector<Segment> s = a.summands();
  s.insert(s.end(), b.summands().begin(), b.summands().end());
  return QuiverRep(a.n(), std::move(s));
}

QuiverRep upper_segments(const OrbitMatrix& a) {
  std::vector<Segment> s;
  for (int i = 1; i <= a.n(); ++i)
    for (int j = i + 1; j <= a.n(); ++j)
      for (int k = 0; k < a(i, j); ++k) s.push_back({i, j - 1});
  return QuiverRep(a.n(), std::move(s));
}

QuiverRep lower_segments(const OrbitMatrix& a) {
  std::vector<Segment> s;
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j < i; ++j)
      for (int k = 0; k < a(i, j); ++k) s.push_back({j, i - 1});
  return QuiverRep(a.n(), std::move(s));
}

}  // namespace flagschur
