#include "flagschur/hecke.hpp"

#include "flagschur/io.hpp"
#include "flagschur/zeroschur.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace flagschur {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || hit[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation");
    }
    hit[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple transposition index out of range");
  auto v = identity(n).images_;
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return Permutation(std::move(v));
}

namespace {

std::vector<int> numbers_in(std::string_view s) {
  std::vector<int> out;
  std::size_t k = 0;
  while (k < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[k])) || s[k] == ',') {
      ++k;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw ParseError("unexpected character '" + std::string(1, s[k]) + "' in permutation");
    }
    int v = 0;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
      v = v * 10 + (s[k] - '0');
      if (v > 1000) throw ParseError("permutation entry too large");
      ++k;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, int n) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::vector<std::vector<int>> factors;  // cycles or single simple letters
  bool word = false;
  if (s.empty() || s == "id" || s == "e") {
    // identity
  } else if (s.front() == '(') {
    std::size_t k = 0;
    while (k < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[k]))) {
        ++k;
        continue;
      }
      if (s[k] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
      const std::size_t close = s.find(')', k);
      if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis: " + std::string(text));
      factors.push_back(numbers_in(s.substr(k + 1, close - k - 1)));
      k = close + 1;
    }
  } else if (s.front() == 's' || s.front() == 't') {
    word = true;
    std::size_t k = 0;
    while (k < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[k])) || s[k] == '*' || s[k] == ',') {
        ++k;
        continue;
      }
      if (s[k] != 's' && s[k] != 't') throw ParseError("expected s<i> in word notation: " + std::string(text));
      std::size_t e = k + 1;
      while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
      if (e == k + 1) throw ParseError("missing index after '" + std::string(1, s[k]) + "'");
      factors.push_back(numbers_in(s.substr(k + 1, e - k - 1)));
      k = e;
    }
  } else {
    throw ParseError("permutation must use cycle notation '(1 2)' or a word 's1 s2': " + std::string(text));
  }
  int size = n;
  if (size <= 0) {
    size = 1;
    for (const auto& f : factors)
      for (int v : f) size = std::max(size, word ? v + 1 : v);
  }
  Permutation out = identity(size);
  for (const auto& f : factors) {
    for (int v : f) {
      if (v < 1 || v > size || (word && v >= size)) throw ParseError("permutation entry out of range");
    }
    if (word) {
      out = out * simple(size, f.front());
      continue;
    }
    std::vector<int> img = identity(size).images_;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (std::count(f.begin(), f.end(), f[k]) > 1) throw ParseError("repeated entry in a cycle");
      img[static_cast<std::size_t>(f[k] - 1)] = f[(k + 1) % f.size()];
    }
    out = out * Permutation(std::move(img));
  }
  return out;
}

Permutation Permutation::from_matrix(const OrbitMatrix& a) {
  if (!a.is_permutation()) throw std::invalid_argument("matrix is not a permutation matrix");
  std::vector<int> img(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i)
    for (int l = 1; l <= a.n(); ++l)
      if (a(i, l) == 1) img[static_cast<std::size_t>(l - 1)] = i;
  return Permutation(std::move(img));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> v = identity(n).images_;
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t l = 0; l < images_.size(); ++l) inv[static_cast<std::size_t>(images_[l] - 1)] = static_cast<int>(l + 1);
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int len = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b) len += images_[a] > images_[b] ? 1 : 0;
  return len;
}

OrbitMatrix Permutation::to_matrix() const {
  const int n = this->n();
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int l = 1; l <= n; ++l) e[static_cast<std::size_t>(((*this)(l)-1) * n + (l - 1))] = 1;
  return OrbitMatrix(n, std::move(e));
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= n(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
    s += '(';
    int v = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(v - 1)]) {
      seen[static_cast<std::size_t>(v - 1)] = true;
      if (!first) s += ' ';
      s += std::to_string(v);
      first = false;
      v = (*this)(v);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("permutations of different sizes");
  std::vector<int> img(a.images_.size());
  for (int l = 1; l <= a.n(); ++l) img[static_cast<std::size_t>(l - 1)] = a(b(l));
  return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------

Permutation hecke_act(int i, const Permutation& sigma, bool mutated) {
  const Permutation moved = Permutation::simple(sigma.n(), i) * sigma;
  if (mutated) return moved;
  return deg_leq(moved.to_matrix(), sigma.to_matrix()) ? moved : sigma;
}

Permutation hecke_mult(const Permutation& x, const Permutation& y) {
  auto m = star(x.to_matrix(), y.to_matrix());
  if (!m || !m->is_permutation()) throw std::logic_error("hecke_mult: product left the permutation orbits");
  return Permutation::from_matrix(*m);
}

Permutation t_generator(int n, int i) { return Permutation::simple(n, i); }

namespace {

// t_i * t_{i+1} * ... * t_{j-1}; the identity when j <= i.
Permutation run_product(int n, int i, int j) {
  Permutation out = Permutation::identity(n);
  for (int k = j - 1; k >= i; --k) out = hecke_mult(t_generator(n, k), out);
  return out;
}

}  // namespace

Permutation t_sigma(const Permutation& sigma) {
  const int n = sigma.n();
  const Permutation inv = sigma.inverse();
  Permutation tau = Permutation::identity(n);
  for (int i = 1; i <= n; ++i) {
    const int m = tau(inv(i));
    tau = hecke_mult(run_product(n, i, m), tau);
  }
  return tau;
}

Permutation interval_idempotent(int n, int i, int j) {
  if (i < 1 || j > n || i > j) throw std::invalid_argument("interval out of range");
  if (i == j) return Permutation::identity(n);
  return hecke_mult(interval_idempotent(n, i + 1, j), run_product(n, i, j));
}

std::vector<Composition> positive_compositions(int n) {
  if (n < 1) throw std::invalid_argument("positive_compositions: n must be positive");
  std::vector<Composition> out;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (mask & (1 << k)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation t_nbar(const Composition& nbar) {
  const int n = nbar.r();
  Permutation out = Permutation::identity(n);
  int start = 0;
  for (int part : nbar.parts()) {
    if (part < 1) throw std::invalid_argument("t_nbar: parts must be positive");
    out = hecke_mult(out, interval_idempotent(n, start + 1, start + part));
    start += part;
  }
  return out;
}

namespace {

std::vector<int> left_descents(const Permutation& x) {
  const Permutation inv = x.inverse();
  std::vector<int> out;
  for (int i = 1; i < x.n(); ++i)
    if (inv(i) > inv(i + 1)) out.push_back(i);
  return out;
}

}  // namespace

std::vector<int> reduced_word(const Permutation& x) {
  std::vector<int> word;
  Permutation cur = x;
  while (true) {
    const auto desc = left_descents(cur);
    if (desc.empty()) break;
    word.push_back(desc.front());
    cur = Permutation::simple(x.n(), desc.front()) * cur;
  }
  return word;
}

std::vector<int> random_reduced_word(const Permutation& x, std::mt19937_64& rng) {
  std::vector<int> word;
  Permutation cur = x;
  while (true) {
    const auto desc = left_descents(cur);
    if (desc.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, desc.size() - 1);
    const int i = desc[pick(rng)];
    word.push_back(i);
    cur = Permutation::simple(x.n(), i) * cur;
  }
  return word;
}

Permutation demazure_oracle(const std::vector<int>& word, const Permutation& y) {
  Permutation cur = y;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = hecke_act(*it, cur);
  return cur;
}

Permutation demazure_oracle(const Permutation& x, const Permutation& y) {
  if (x.n() != y.n()) throw std::invalid_argument("permutations of different sizes");
  return demazure_oracle(reduced_word(x), y);
}

Report verify_hecke_relations(int n, bool mutated) {
  Report rep;
  rep.suite = "hecke n=" + std::to_string(n);
  const auto perms = Permutation::all(n);
  auto act = [&](int i, const Permutation& s) { return hecke_act(i, s, mutated); };
  for (int i = 1; i < n; ++i) {
    const Permutation ti = t_generator(n, i);
    if (!mutated) {
      rep.add("t" + std::to_string(i) + " is an idempotent", hecke_mult(ti, ti) == ti);
    }
    bool idem = true;
    for (const auto& s : perms) idem = idem && act(i, act(i, s)) == act(i, s);
    rep.add("t" + std::to_string(i) + "^2 = t" + std::to_string(i) + " on H_0(" + std::to_string(n) + ")", idem);
    for (int j = i + 1; j < n; ++j) {
      bool ok = true;
      for (const auto& s : perms) {
        if (j == i + 1) {
          ok = ok && act(i, act(j, act(i, s))) == act(j, act(i, act(j, s)));
        } else {
          ok = ok && act(i, act(j, s)) == act(j, act(i, s));
        }
      }
      const std::string name = j == i + 1 ? "braid t" + std::to_string(i) + " t" + std::to_string(j)
                                          : "commute t" + std::to_string(i) + " t" + std::to_string(j);
      rep.add(name, ok);
    }
  }
  return rep;
}

}  // namespace flagschur
