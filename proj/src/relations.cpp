#include "flagschur/relations.hpp"

#include <cstdlib>
#include <stdexcept>

namespace flagschur {

std::optional<Composition> path_end(const std::vector<Letter>& letters, const Composition& d) {
  Composition t = d;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->i < 1 || it->i >= t.n()) return std::nullopt;
    std::optional<Composition> next;
    if (it->kind == 'E') {
      if (t(it->i + 1) == 0) return std::nullopt;
      next = t.shifted(it->i, it->i + 1);
    } else {
      if (t(it->i) == 0) return std::nullopt;
      next = t.shifted(it->i + 1, it->i);
    }
    if (!next) return std::nullopt;
    t = *next;
  }
  return t;
}

namespace {

// d + sum of signed unit vectors; nullopt when a part goes negative.
std::optional<Composition> offset(const Composition& d, const std::vector<std::pair<int, int>>& moves) {
  std::vector<int> parts = d.parts();
  for (auto [idx, delta] : moves) {
    if (idx < 1 || idx > d.n()) continue;
    parts[static_cast<std::size_t>(idx - 1)] += delta;
  }
  for (int x : parts)
    if (x < 0) return std::nullopt;
  return Composition(std::move(parts));
}

std::string inst_name(const char* family, int i, int j, const Composition& d) {
  return std::string(family) + "[" + std::to_string(i) + "," + std::to_string(j) + "] at d=(" + d.to_string() + ")";
}

std::vector<Letter> word(std::initializer_list<std::pair<char, int>> xs) {
  std::vector<Letter> out;
  for (auto [k, i] : xs) out.push_back({k, i});
  return out;
}

// Targets of P, N and C instances.
std::optional<Composition> serre_target(const Composition& d, int i, int j, int sign) {
  if (std::abs(i - j) == 1) {
    return offset(d, {{i, 2 * sign}, {j, sign}, {i + 1, -2 * sign}, {j + 1, -sign}});
  }
  return offset(d, {{i, sign}, {j, sign}, {i + 1, -sign}, {j + 1, -sign}});
}

template <class Coeff>
RelationInstance<Coeff> make(std::string name, const Composition& d, const Composition& target,
                             std::vector<PathTerm<Coeff>> paths, Coeff k) {
  return RelationInstance<Coeff>{std::move(name), d, target, std::move(paths), std::move(k)};
}

}  // namespace

int lambda_coefficient(const Composition& d, int i) {
  if (d(i) > 0 && d(i + 1) == 0) return 1;
  if (d(i + 1) > 0 && d(i) == 0) return -1;
  return 0;
}

std::vector<RelationInstance<QPoly>> relations_q(int n, int r, SerreMutation mutation) {
  if (n < 2) return {};
  const QPoly q = QPoly::q();
  const QPoly mid = mutation == SerreMutation::MiddleCoefficient ? q + QPoly(2) : q + QPoly(1);
  std::vector<RelationInstance<QPoly>> out;
  for (const auto& d : compositions(n, r)) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (i != j) {
          if (auto t = serre_target(d, i, j, 1)) {
            std::vector<PathTerm<QPoly>> p;
            if (j == i + 1) {
              p = {{QPoly(1), word({{'E', i}, {'E', i}, {'E', j}})},
                   {-mid, word({{'E', i}, {'E', j}, {'E', i}})},
                   {q, word({{'E', j}, {'E', i}, {'E', i}})}};
            } else if (j == i - 1) {
              p = {{q, word({{'E', i}, {'E', i}, {'E', j}})},
                   {-mid, word({{'E', i}, {'E', j}, {'E', i}})},
                   {QPoly(1), word({{'E', j}, {'E', i}, {'E', i}})}};
            } else {
              p = {{QPoly(1), word({{'E', i}, {'E', j}})}, {QPoly(-1), word({{'E', j}, {'E', i}})}};
            }
            out.push_back(make(inst_name("P", i, j, d), d, *t, std::move(p), QPoly()));
          }
          if (auto t = serre_target(d, i, j, -1)) {
            std::vector<PathTerm<QPoly>> p;
            if (j == i + 1) {
              p = {{q, word({{'F', i}, {'F', i}, {'F', j}})},
                   {-mid, word({{'F', i}, {'F', j}, {'F', i}})},
                   {QPoly(1), word({{'F', j}, {'F', i}, {'F', i}})}};
            } else if (j == i - 1) {
              p = {{QPoly(1), word({{'F', i}, {'F', i}, {'F', j}})},
                   {-mid, word({{'F', i}, {'F', j}, {'F', i}})},
                   {q, word({{'F', j}, {'F', i}, {'F', i}})}};
            } else {
              p = {{QPoly(1), word({{'F', i}, {'F', j}})}, {QPoly(-1), word({{'F', j}, {'F', i}})}};
            }
            out.push_back(make(inst_name("N", i, j, d), d, *t, std::move(p), QPoly()));
          }
        }
        if (auto t = offset(d, {{i, 1}, {j + 1, 1}, {i + 1, -1}, {j, -1}})) {
          std::vector<PathTerm<QPoly>> p = {{QPoly(1), word({{'E', i}, {'F', j}})},
                                            {QPoly(-1), word({{'F', j}, {'E', i}})}};
          QPoly k;
          if (i == j) k = -(quantum_int(d(i)) - quantum_int(d(i + 1)));
          out.push_back(make(inst_name("C", i, j, d), d, *t, std::move(p), k));
        }
      }
    }
  }
  return out;
}

std::vector<RelationInstance<BigInt>> relations_0(int n, int r, CommutatorForm form, bool flip_lambda) {
  if (n < 2) return {};
  std::vector<RelationInstance<BigInt>> out;
  for (const auto& d : compositions(n, r)) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (i != j) {
          if (auto t = serre_target(d, i, j, 1)) {
            std::vector<PathTerm<BigInt>> p;
            if (j == i + 1) {
              p = {{1, word({{'E', i}, {'E', i}, {'E', j}})}, {-1, word({{'E', i}, {'E', j}, {'E', i}})}};
            } else if (j == i - 1) {
              p = {{-1, word({{'E', i}, {'E', j}, {'E', i}})}, {1, word({{'E', j}, {'E', i}, {'E', i}})}};
            } else {
              p = {{1, word({{'E', i}, {'E', j}})}, {-1, word({{'E', j}, {'E', i}})}};
            }
            out.push_back(make(inst_name("P0", i, j, d), d, *t, std::move(p), BigInt(0)));
          }
          if (auto t = serre_target(d, i, j, -1)) {
            std::vector<PathTerm<BigInt>> p;
            if (j == i + 1) {
              p = {{-1, word({{'F', i}, {'F', j}, {'F', i}})}, {1, word({{'F', j}, {'F', i}, {'F', i}})}};
            } else if (j == i - 1) {
              p = {{1, word({{'F', i}, {'F', i}, {'F', j}})}, {-1, word({{'F', i}, {'F', j}, {'F', i}})}};
            } else {
              p = {{1, word({{'F', i}, {'F', j}})}, {-1, word({{'F', j}, {'F', i}})}};
            }
            out.push_back(make(inst_name("N0", i, j, d), d, *t, std::move(p), BigInt(0)));
          }
        }
        if (auto t = offset(d, {{i, 1}, {j + 1, 1}, {i + 1, -1}, {j, -1}})) {
          std::vector<PathTerm<BigInt>> p{{1, word({{'E', i}, {'F', j}})}};
          if (form == CommutatorForm::EiFj_minus_FjEi) {
            p.push_back({-1, word({{'F', j}, {'E', i}})});
          } else {
            p.push_back({-1, word({{'F', i}, {'E', j}})});
          }
          BigInt k = 0;
          if (i == j) k = -lambda_coefficient(d, i) * (flip_lambda ? -1 : 1);
          out.push_back(make(inst_name("C0", i, j, d), d, *t, std::move(p), k));
        }
      }
    }
  }
  return out;
}

std::string letters_to_string(const std::vector<Letter>& letters) {
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += ' ';
    s += l.kind;
    s += std::to_string(l.i);
  }
  return s;
}

}  // namespace flagschur
