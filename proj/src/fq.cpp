#include "flagschur/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace flagschur {

namespace {

constexpr int kMaxPrime = 19;

struct InverseTable {
  std::array<std::array<int, kMaxPrime + 1>, kMaxPrime + 1> inv{};
  InverseTable() {
    for (int p = 2; p <= kMaxPrime; ++p)
      for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
          if ((a * b) % p == 1) inv[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)] = b;
  }
};

int inverse_mod(int a, int p) {
  static const InverseTable table;
  return table.inv[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)];
}

int first_nonzero(const FqVec& v, int width) {
  for (int c = 0; c < width; ++c)
    if (v[static_cast<std::size_t>(c)] != 0) return c;
  return -1;
}

// v -= c * w (mod p) on the first `width` coordinates.
void axpy(FqVec& v, int c, const FqVec& w, int width, int p) {
  if (c == 0) return;
  for (int k = 0; k < width; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    v[idx] = static_cast<std::uint8_t>(((v[idx] - c * w[idx]) % p + p) % p);
  }
}

void scale(FqVec& v, int c, int width, int p) {
  for (int k = 0; k < width; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    v[idx] = static_cast<std::uint8_t>((v[idx] * c) % p);
  }
}

// Incremental row echelon form used for rank counting in hot loops.
struct Echelon {
  int p;
  int width;
  int rank = 0;
  std::array<FqVec, kMaxAmbient> rows{};
  std::array<int, kMaxAmbient> piv{};

  Echelon(int p_, int width_) : p(p_), width(width_) {}

  bool insert(FqVec v) {
    for (int k = 0; k < rank; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      axpy(v, v[static_cast<std::size_t>(piv[kk])], rows[kk], width, p);
    }
    const int c = first_nonzero(v, width);
    if (c < 0) return false;
    scale(v, inverse_mod(v[static_cast<std::size_t>(c)], p), width, p);
    rows[static_cast<std::size_t>(rank)] = v;
    piv[static_cast<std::size_t>(rank)] = c;
    ++rank;
    return true;
  }
};

}  // namespace

const std::vector<int>& supported_primes() {
  static const std::vector<int> primes{2, 3, 5, 7, 11, 13, 17, 19};
  return primes;
}

bool is_supported_prime(int p) {
  const auto& ps = supported_primes();
  return std::find(ps.begin(), ps.end(), p) != ps.end();
}

void require_supported_prime(int p) {
  if (!is_supported_prime(p)) {
    throw std::invalid_argument("unsupported prime " + std::to_string(p) + " (supported: 2..19)");
  }
}

void check_desk_scale(int r, bool allow_large) {
  if (r > kMaxAmbient) {
    throw ResourceLimitError("dimension " + std::to_string(r) + " exceeds the hard limit " +
                             std::to_string(kMaxAmbient));
  }
  if (r > 4 && !allow_large) {
    throw ResourceLimitError("dimension " + std::to_string(r) +
                             " exceeds the desk-scale limit r <= 4; explicit opt-in required");
  }
}

// ---------------------------------------------------------------------------

FqSubspace::FqSubspace(int p, int ambient) : p_(p), ambient_(ambient) {
  require_supported_prime(p);
  if (ambient < 0 || ambient > kMaxAmbient) throw ResourceLimitError("ambient dimension out of range");
}

FqSubspace FqSubspace::span(int p, int ambient, std::span<const FqVec> generators) {
  FqSubspace s(p, ambient);
  for (FqVec v : generators) {
    for (int k = 0; k < ambient; ++k) v[static_cast<std::size_t>(k)] %= static_cast<std::uint8_t>(p);
    v = s.reduce(v);
    const int c = first_nonzero(v, ambient);
    if (c < 0) continue;
    scale(v, inverse_mod(v[static_cast<std::size_t>(c)], p), ambient, p);
    // Clear the new pivot column from the existing rows.
    for (int k = 0; k < s.dim_; ++k) {
      auto& row = s.rows_[static_cast<std::size_t>(k)];
      axpy(row, row[static_cast<std::size_t>(c)], v, ambient, p);
    }
    // Insert keeping pivots increasing.
    int pos = s.dim_;
    while (pos > 0 && s.pivots_[static_cast<std::size_t>(pos - 1)] > c) {
      s.rows_[static_cast<std::size_t>(pos)] = s.rows_[static_cast<std::size_t>(pos - 1)];
      s.pivots_[static_cast<std::size_t>(pos)] = s.pivots_[static_cast<std::size_t>(pos - 1)];
      --pos;
    }
    s.rows_[static_cast<std::size_t>(pos)] = v;
    s.pivots_[static_cast<std::size_t>(pos)] = c;
    ++s.dim_;
  }
  return s;
}

FqSubspace FqSubspace::whole(int p, int ambient) {
  std::vector<FqVec> gens(static_cast<std::size_t>(ambient), FqVec{});
  for (int k = 0; k < ambient; ++k) gens[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
  return span(p, ambient, gens);
}

FqVec FqSubspace::reduce(FqVec v) const {
  for (int k = 0; k < dim_; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    axpy(v, v[static_cast<std::size_t>(pivots_[kk])], rows_[kk], ambient_, p_);
  }
  return v;
}

bool FqSubspace::contains(const FqVec& v) const { return first_nonzero(reduce(v), ambient_) < 0; }

bool FqSubspace::contains(const FqSubspace& w) const {
  if (w.ambient_ != ambient_ || w.p_ != p_) return false;
  for (const auto& row : w.basis())
    if (!contains(row)) return false;
  return true;
}

FqSubspace FqSubspace::sum(const FqSubspace& w) const {
  if (w.ambient_ != ambient_ || w.p_ != p_) throw std::invalid_argument("sum: different ambient spaces");
  std::vector<FqVec> gens(basis().begin(), basis().end());
  gens.insert(gens.end(), w.basis().begin(), w.basis().end());
  return span(p_, ambient_, gens);
}

FqSubspace FqSubspace::intersect(const FqSubspace& w) const {
  if (w.ambient_ != ambient_ || w.p_ != p_) {
    throw std::invalid_argument("intersect: different ambient spaces");
  }
  // Zassenhaus: row-reduce [[u, u], [w, 0]]; rows with zero left half carry
  // the intersection in their right half.
  const int width = 2 * ambient_;
  std::vector<std::vector<int>> rows;
  for (const auto& u : basis()) {
    std::vector<int> row(static_cast<std::size_t>(width));
    for (int k = 0; k < ambient_; ++k) {
      row[static_cast<std::size_t>(k)] = u[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(ambient_ + k)] = u[static_cast<std::size_t>(k)];
    }
    rows.push_back(std::move(row));
  }
  for (const auto& x : w.basis()) {
    std::vector<int> row(static_cast<std::size_t>(width), 0);
    for (int k = 0; k < ambient_; ++k) row[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)];
    rows.push_back(std::move(row));
  }
  std::size_t lead = 0;
  for (int col = 0; col < width && lead < rows.size(); ++col) {
    std::size_t sel = lead;
    while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[lead]);
    const int inv = inverse_mod(rows[lead][static_cast<std::size_t>(col)], p_);
    for (auto& v : rows[lead]) v = (v * inv) % p_;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == lead) continue;
      const int c = rows[k][static_cast<std::size_t>(col)];
      if (c == 0) continue;
      for (int t = 0; t < width; ++t) {
        auto& e = rows[k][static_cast<std::size_t>(t)];
        e = ((e - c * rows[lead][static_cast<std::size_t>(t)]) % p_ + p_) % p_;
      }
    }
    ++lead;
  }
  std::vector<FqVec> gens;
  for (std::size_t k = 0; k < lead; ++k) {
    bool left_zero = true;
    for (int t = 0; t < ambient_; ++t) left_zero = left_zero && rows[k][static_cast<std::size_t>(t)] == 0;
    if (!left_zero) continue;
    FqVec v{};
    for (int t = 0; t < ambient_; ++t) {
      v[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(rows[k][static_cast<std::size_t>(ambient_ + t)]);
    }
    gens.push_back(v);
  }
  return span(p_, ambient_, gens);
}

namespace {

void enumerate_rref(int p, int ambient, int dim, std::vector<FqSubspace>& out) {
  // Choose pivot columns, then fill every free entry right of each pivot
  // outside the pivot columns.
  std::vector<int> pivots(static_cast<std::size_t>(dim));
  std::iota(pivots.begin(), pivots.end(), 0);
  while (true) {
    std::vector<std::pair<int, int>> free_slots;  // (row, col)
    for (int t = 0; t < dim; ++t) {
      for (int c = pivots[static_cast<std::size_t>(t)] + 1; c < ambient; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_slots.emplace_back(t, c);
      }
    }
    std::vector<int> digits(free_slots.size(), 0);
    while (true) {
      std::vector<FqVec> rows(static_cast<std::size_t>(dim), FqVec{});
      for (int t = 0; t < dim; ++t) {
        rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(t)])] = 1;
      }
      for (std::size_t s = 0; s < free_slots.size(); ++s) {
        rows[static_cast<std::size_t>(free_slots[s].first)][static_cast<std::size_t>(free_slots[s].second)] =
            static_cast<std::uint8_t>(digits[s]);
      }
      out.push_back(FqSubspace::span(p, ambient, rows));
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
      if (k == digits.size()) break;
    }
    // Next pivot combination.
    int t = dim - 1;
    while (t >= 0 && pivots[static_cast<std::size_t>(t)] == ambient - dim + t) --t;
    if (t < 0) break;
    ++pivots[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < dim; ++u) pivots[static_cast<std::size_t>(u)] = pivots[static_cast<std::size_t>(u - 1)] + 1;
  }
}

}  // namespace

const std::vector<FqSubspace>& enumerate_subspaces(int p, int ambient, int dim) {
  require_supported_prime(p);
  if (ambient < 0 || ambient > kMaxAmbient) throw ResourceLimitError("ambient dimension out of range");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<FqSubspace>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(p, ambient, dim);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<FqSubspace> out;
  if (dim == 0) {
    out.emplace_back(p, ambient);
  } else if (dim > 0 && dim <= ambient) {
    enumerate_rref(p, ambient, dim, out);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::vector<FqSubspace> subspaces_between(const FqSubspace& base, const FqSubspace& top, int dim) {
  std::vector<FqSubspace> out;
  if (!top.contains(base) || dim < base.dim() || dim > top.dim()) return out;
  const int p = top.p();
  // Work in the coordinates of top's echelon basis: a vector of top is the
  // combination of basis rows given by its entries at the pivot columns.
  auto to_local = [&](const FqVec& v) {
    FqVec c{};
    for (int k = 0; k < top.dim(); ++k) c[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(top.pivot(k))];
    return c;
  };
  auto to_global = [&](const FqVec& c) {
    FqVec v{};
    for (int k = 0; k < top.dim(); ++k) {
      const int ck = c[static_cast<std::size_t>(k)];
      if (ck == 0) continue;
      const auto& row = top.basis()[static_cast<std::size_t>(k)];
      for (int t = 0; t < top.ambient_dim(); ++t) {
        v[static_cast<std::size_t>(t)] =
            static_cast<std::uint8_t>((v[static_cast<std::size_t>(t)] + ck * row[static_cast<std::size_t>(t)]) % p);
      }
    }
    return v;
  };
  std::vector<FqVec> local_gens;
  for (const auto& v : base.basis()) local_gens.push_back(to_local(v));
  const FqSubspace local_base = FqSubspace::span(p, top.dim(), local_gens);
  for (const auto& w : subspaces_containing(local_base, dim)) {
    std::vector<FqVec> gens;
    for (const auto& c : w.basis()) gens.push_back(to_global(c));
    out.push_back(FqSubspace::span(p, top.ambient_dim(), gens));
  }
  return out;
}

std::vector<FqSubspace> subspaces_containing(const FqSubspace& base, int dim) {
  std::vector<FqSubspace> out;
  const int p = base.p();
  const int ambient = base.ambient_dim();
  if (dim < base.dim() || dim > ambient) return out;
  if (dim == base.dim()) {
    out.push_back(base);
    return out;
  }
  // Coordinates outside the pivot columns of `base` parametrize the quotient.
  std::vector<int> free_cols;
  for (int c = 0, k = 0; c < ambient; ++c) {
    if (k < base.dim() && base.pivot(k) == c) {
      ++k;
      continue;
    }
    free_cols.push_back(c);
  }
  const int qdim = static_cast<int>(free_cols.size());
  const auto& quotient_subs = enumerate_subspaces(p, qdim, dim - base.dim());
  out.reserve(quotient_subs.size());
  for (const auto& qs : quotient_subs) {
    std::vector<FqVec> gens(base.basis().begin(), base.basis().end());
    for (const auto& row : qs.basis()) {
      FqVec lifted{};
      for (int k = 0; k < qdim; ++k) {
        lifted[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(k)])] = row[static_cast<std::size_t>(k)];
      }
      gens.push_back(lifted);
    }
    out.push_back(FqSubspace::span(p, ambient, gens));
  }
  return out;
}

FqVec FqMatrix::apply(const FqVec& v) const {
  FqVec out{};
  for (int i = 0; i < dim; ++i) {
    int acc = 0;
    for (int j = 0; j < dim; ++j) {
      acc += rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(acc % p);
  }
  return out;
}

FqMatrix random_invertible(int p, int dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, p - 1);
  while (true) {
    FqMatrix g{p, dim, {}};
    Echelon e(p, dim);
    bool ok = true;
    for (int i = 0; i < dim && ok; ++i) {
      for (int j = 0; j < dim; ++j) {
        g.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(coin(rng));
      }
      ok = e.insert(g.rows[static_cast<std::size_t>(i)]);
    }
    if (ok) return g;
  }
}

// ---------------------------------------------------------------------------

FqFlag::FqFlag(std::vector<FqSubspace> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("flag needs at least one step");
  const int p = steps_.front().p();
  const int ambient = steps_.front().ambient_dim();
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    if (steps_[k].p() != p || steps_[k].ambient_dim() != ambient) {
      throw std::invalid_argument("flag steps live in different spaces");
    }
    if (k > 0 && !steps_[k].contains(steps_[k - 1])) throw std::invalid_argument("flag steps are not nested");
  }
  if (steps_.back().dim() != ambient) throw std::invalid_argument("last flag step must be the whole space");
  Echelon e(p, ambient);
  for (const auto& s : steps_) {
    for (const auto& v : s.basis()) {
      if (e.insert(v)) adapted_.push_back(v);
    }
  }
}

Composition FqFlag::type() const {
  std::vector<int> parts;
  int prev = 0;
  for (const auto& s : steps_) {
    parts.push_back(s.dim() - prev);
    prev = s.dim();
  }
  return Composition(std::move(parts));
}

FqFlag FqFlag::transformed(const FqMatrix& g) const {
  std::vector<FqSubspace> out;
  for (const auto& s : steps_) {
    std::vector<FqVec> gens;
    for (const auto& v : s.basis()) gens.push_back(g.apply(v));
    out.push_back(FqSubspace::span(s.p(), s.ambient_dim(), gens));
  }
  return FqFlag(std::move(out));
}

FqFlag FqFlag::operator+(const FqFlag& other) const {
  if (other.n() != n()) throw std::invalid_argument("flag sum: different lengths");
  std::vector<FqSubspace> out;
  for (int i = 1; i <= n(); ++i) out.push_back(step(i).sum(other.step(i)));
  return FqFlag(std::move(out));
}

FqFlag FqFlag::intersect(const FqFlag& other) const {
  if (other.n() != n()) throw std::invalid_argument("flag intersection: different lengths");
  std::vector<FqSubspace> out;
  for (int i = 1; i <= n(); ++i) out.push_back(step(i).intersect(other.step(i)));
  return FqFlag(std::move(out));
}

namespace {

void flags_rec(const Composition& type, int level, const FqSubspace& current,
               std::vector<FqSubspace>& chain, const std::function<void(const FqFlag&)>& fn) {
  if (level > type.n()) {
    fn(FqFlag(chain));
    return;
  }
  const int target = current.dim() + type(level);
  for (const auto& next : subspaces_containing(current, target)) {
    chain.push_back(next);
    flags_rec(type, level + 1, next, chain, fn);
    chain.pop_back();
  }
}

}  // namespace

void for_each_flag(int p, const Composition& type, const std::function<void(const FqFlag&)>& fn) {
  require_supported_prime(p);
  if (type.r() > kMaxAmbient) throw ResourceLimitError("flag dimension out of range");
  std::vector<FqSubspace> chain;
  flags_rec(type, 1, FqSubspace(p, type.r()), chain, fn);
}

std::vector<FqFlag> enumerate_flags(int p, const Composition& type) {
  std::vector<FqFlag> out;
  for_each_flag(p, type, [&](const FqFlag& f) { out.push_back(f); });
  return out;
}

OrbitMatrix relative_position(const FqFlag& f, const FqFlag& g) {
  if (f.n() != g.n() || f.p() != g.p() || f.ambient_dim() != g.ambient_dim()) {
    throw std::invalid_argument("relative_position: flags in different spaces");
  }
  const int n = f.n();
  const int p = f.p();
  const int r = f.ambient_dim();
  const FqSubspace zero(p, r);
  auto fs = [&](int i) -> const FqSubspace& { return i == 0 ? zero : f.step(i); };
  auto gs = [&](int j) -> const FqSubspace& { return j == 0 ? zero : g.step(j); };
  std::vector<int> e(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int hi = fs(i - 1).sum(fs(i).intersect(gs(j))).dim();
      const int lo = fs(i - 1).sum(fs(i).intersect(gs(j - 1))).dim();
      e[static_cast<std::size_t>((i - 1) * n + j - 1)] = hi - lo;
    }
  }
  return OrbitMatrix(n, std::move(e));
}

void intersection_dims(const FqFlag& f, const FqFlag& g, std::span<int> out) {
  const int n = f.n();
  const int p = f.p();
  const int r = f.ambient_dim();
  const auto& gb = g.adapted_basis();
  std::array<int, kMaxAmbient + 1> sum_rank{};
  for (int i = 1; i <= n; ++i) {
    const FqSubspace& vi = f.step(i);
    Echelon e(p, r);
    for (const auto& v : vi.basis()) e.insert(v);
    sum_rank[0] = e.rank;
    for (int t = 0; t < r; ++t) {
      if (e.rank < r) e.insert(gb[static_cast<std::size_t>(t)]);
      sum_rank[static_cast<std::size_t>(t + 1)] = e.rank;
    }
    for (int j = 1; j <= n; ++j) {
      const int dj = g.step_dim(j);
      out[static_cast<std::size_t>((i - 1) * n + j - 1)] = vi.dim() + dj - sum_rank[static_cast<std::size_t>(dj)];
    }
  }
}

OrbitMatrix relative_position_by_ranks(const FqFlag& f, const FqFlag& g) {
  if (f.n() != g.n() || f.p() != g.p() || f.ambient_dim() != g.ambient_dim()) {
    throw std::invalid_argument("relative_position: flags in different spaces");
  }
  const int n = f.n();
  std::vector<int> c(static_cast<std::size_t>(n * n));
  intersection_dims(f, g, c);
  auto at = [&](int i, int j) { return (i == 0 || j == 0) ? 0 : c[static_cast<std::size_t>((i - 1) * n + j - 1)]; };
  std::vector<int> e(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      e[static_cast<std::size_t>((i - 1) * n + j - 1)] = at(i, j) - at(i - 1, j) - at(i, j - 1) + at(i - 1, j - 1);
  return OrbitMatrix(n, std::move(e));
}

std::pair<FqFlag, FqFlag> standard_flag_pair(const OrbitMatrix& a, int p) {
  require_supported_prime(p);
  const int n = a.n();
  const int r = a.r();
  if (r > kMaxAmbient) throw ResourceLimitError("flag dimension out of range");
  const LinePairs pairs = pairs_from_matrix(a);
  std::vector<FqSubspace> left;
  std::vector<FqSubspace> right;
  for (int k = 1; k <= n; ++k) {
    std::vector<FqVec> lg;
    std::vector<FqVec> rg;
    for (int l = 0; l < r; ++l) {
      FqVec x{};
      x[static_cast<std::size_t>(l)] = 1;
      if (pairs[static_cast<std::size_t>(l)].i <= k) lg.push_back(x);
      if (pairs[static_cast<std::size_t>(l)].j <= k) rg.push_back(x);
    }
    left.push_back(FqSubspace::span(p, r, lg));
    right.push_back(FqSubspace::span(p, r, rg));
  }
  return {FqFlag(std::move(left)), FqFlag(std::move(right))};
}

std::int64_t count_middle_flags(const OrbitMatrix& a, const OrbitMatrix& a2, const FqFlag& f1,
                                const FqFlag& f2) {
  if (a.n() != a2.n() || a.n() != f1.n()) return 0;
  if (a.col_type() != a2.row_type()) return 0;
  if (f1.type() != a.row_type() || f2.type() != a2.col_type()) return 0;
  std::int64_t count = 0;
  for_each_flag(f1.p(), a.col_type(), [&](const FqFlag& f) {
    if (relative_position_by_ranks(f1, f) == a && relative_position_by_ranks(f, f2) == a2) ++count;
  });
  return count;
}

std::int64_t count_middle_flags(const OrbitMatrix& a, const OrbitMatrix& a2, const OrbitMatrix& a3,
                                int p) {
  require_supported_prime(p);
  if (a.n() != a2.n() || a.n() != a3.n()) return 0;
  if (a.r() != a2.r() || a.r() != a3.r()) return 0;
  if (a.col_type() != a2.row_type() || a3.row_type() != a.row_type() || a3.col_type() != a2.col_type()) {
    return 0;
  }
  check_desk_scale(a.r());
  auto [f1, f2] = standard_flag_pair(a3, p);
  return count_middle_flags(a, a2, f1, f2);
}

std::int64_t count_nested_middle_flags(const OrbitMatrix& a, const OrbitMatrix& a2, const OrbitMatrix& a3,
                                       int p) {
  require_supported_prime(p);
  if (!a.is_upper() || !a2.is_upper() || !a3.is_upper()) {
    throw std::invalid_argument("count_nested_middle_flags: matrices must be upper triangular");
  }
  if (a.n() != a2.n() || a.n() != a3.n() || a.r() != a2.r() || a.r() != a3.r()) return 0;
  if (a.col_type() != a2.row_type() || a3.row_type() != a.row_type() || a3.col_type() != a2.col_type()) {
    return 0;
  }
  const int n = a.n();
  const int r = a.r();
  if (r > kMaxAmbient) throw ResourceLimitError("flag dimension out of range");
  const auto [f1, f2] = standard_flag_pair(a3, p);
  const Composition e = a.col_type();
  std::vector<FqSubspace> steps;
  std::int64_t count = 0;
  int dim = 0;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      steps.push_back(FqSubspace::whole(p, r));
      const FqFlag f(steps);
      if (relative_position_by_ranks(f1, f) == a && relative_position_by_ranks(f, f2) == a2) ++count;
      steps.pop_back();
      return;
    }
    const FqSubspace prev = k == 1 ? FqSubspace(p, r) : steps.back();
    const FqSubspace base = prev.sum(f2.step(k));
    dim += e(k);
    for (const auto& w : subspaces_between(base, f1.step(k), dim)) {
      steps.push_back(w);
      self(self, k + 1);
      steps.pop_back();
    }
    dim -= e(k);
  };
  rec(rec, 1);
  return count;
}

// ---------------------------------------------------------------------------

FqQuiverRep::FqQuiverRep(const QuiverRep& iso, int p)
    : n_(iso.n()), p_(p), summands_(iso.summands()), coords_(static_cast<std::size_t>(iso.n())) {
  require_supported_prime(p);
  for (std::size_t s = 0; s < summands_.size(); ++s) {
    for (int v = summands_[s].lo; v <= summands_[s].hi; ++v) {
      coords_[static_cast<std::size_t>(v - 1)].push_back(static_cast<int>(s));
    }
  }
  for (const auto& c : coords_) {
    if (static_cast<int>(c.size()) > kMaxAmbient) throw ResourceLimitError("representation too large");
  }
}

FqVec FqQuiverRep::map(int from, int to, const FqVec& v) const {
  FqVec out{};
  const auto& src = coords_[static_cast<std::size_t>(from - 1)];
  const auto& dst = coords_[static_cast<std::size_t>(to - 1)];
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (v[k] == 0) continue;
    const int s = src[k];
    auto it = std::find(dst.begin(), dst.end(), s);
    if (it == dst.end()) continue;  // the summand ends before `to`
    const auto t = static_cast<std::size_t>(it - dst.begin());
    out[t] = static_cast<std::uint8_t>((out[t] + v[k]) % p_);
  }
  return out;
}

namespace {

struct SubmoduleCounter {
  const FqQuiverRep& rep;
  const QuiverRep& sub_iso;
  const QuiverRep& quot_iso;
  std::vector<int> target_dims;
  std::vector<FqSubspace> chosen;
  std::int64_t count = 0;

  FqSubspace image(int from, int to, const FqSubspace& x) const {
    std::vector<FqVec> gens;
    for (const auto& v : x.basis()) gens.push_back(rep.map(from, to, v));
    return FqSubspace::span(rep.p(), rep.dim(to), gens);
  }

  FqSubspace whole(int v) const { return FqSubspace::whole(rep.p(), rep.dim(v)); }

  // Rank data of X and L/X for composite maps ending at vertex v.
  bool ranks_match(int v) const {
    const FqSubspace& xv = chosen[static_cast<std::size_t>(v - 1)];
    for (int i = 1; i <= v; ++i) {
      const FqSubspace& xi = chosen[static_cast<std::size_t>(i - 1)];
      const int sub_rank = image(i, v, xi).dim();
      if (sub_rank != sub_iso.rank(i, v)) return false;
      const int quot_rank = image(i, v, whole(i)).sum(xv).dim() - xv.dim();
      if (quot_rank != quot_iso.rank(i, v)) return false;
    }
    return true;
  }

  void run(int v) {
    if (v > rep.n()) {
      ++count;
      return;
    }
    FqSubspace must_contain(rep.p(), rep.dim(v));
    if (v > 1) must_contain = image(v - 1, v, chosen[static_cast<std::size_t>(v - 2)]);
    for (const auto& x : subspaces_containing(must_contain, target_dims[static_cast<std::size_t>(v - 1)])) {
      chosen.push_back(x);
      if (ranks_match(v)) run(v + 1);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::int64_t count_submodules(const QuiverRep& l, const QuiverRep& m, const QuiverRep& nrep, int p) {
  require_supported_prime(p);
  if (l.n() != m.n() || l.n() != nrep.n()) return 0;
  const auto dl = l.dim_vector();
  const auto dm = m.dim_vector();
  const auto dn = nrep.dim_vector();
  for (std::size_t v = 0; v < dl.size(); ++v) {
    if (dl[v] != dm[v] + dn[v]) return 0;
  }
  FqQuiverRep rep(l, p);
  SubmoduleCounter counter{rep, nrep, m, dn, {}, 0};
  counter.run(1);
  return counter.count;
}

}  // namespace flagschur
