#pragma once

// The 0-Hecke algebra H_0(n) = k_d G(n,n) k_d, d = (1,...,1), on
// permutation orbits.

#include "flagschur/core.hpp"
#include "flagschur/report.hpp"

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace flagschur {

/// Permutation of {1..n}; sigma(l) = images[l-1]. Its orbit matrix has
/// A_{sigma(l), l} = 1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The simple transposition (i, i+1).
  static Permutation simple(int n, int i);
  /// Cycle notation "(1 2)(3)" or a word "s1 s2 s1" (product left to right).
  static Permutation parse(std::string_view text, int n);
  static Permutation from_matrix(const OrbitMatrix& a);
  /// All of S_n in lexicographic order of images.
  static std::vector<Permutation> all(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int l) const { return images_.at(static_cast<std::size_t>(l - 1)); }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  int length() const;
  OrbitMatrix to_matrix() const;
  /// Cycle notation without fixed points, "()" for the identity.
  std::string to_cycle_string() const;

  /// (a * b)(l) = a(b(l)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// t_i * sigma: (i,i+1)sigma if its orbit degenerates from sigma's, else
/// sigma. With `mutated` the transposition is always applied (the plain
/// symmetric-group action, used by mutation tests).
Permutation hecke_act(int i, const Permutation& sigma, bool mutated = false);
/// Star product restricted to permutation orbits.
Permutation hecke_mult(const Permutation& x, const Permutation& y);
/// The generator t_i = (i,i+1) k_d.
Permutation t_generator(int n, int i);

/// The staged product t^{sigma,n} * ... * t^{sigma,1}.
Permutation t_sigma(const Permutation& sigma);
/// t^{[i,j]} = t^{[i+1,j]} * t_i * ... * t_{j-1}, t^{[i,i]} = k_d.
Permutation interval_idempotent(int n, int i, int j);
/// All compositions of n with positive parts, in lexicographic order.
std::vector<Composition> positive_compositions(int n);
/// Product of the interval idempotents of the blocks of nbar.
Permutation t_nbar(const Composition& nbar);

/// Deterministic reduced word: repeatedly strip the smallest left descent.
std::vector<int> reduced_word(const Permutation& x);
/// A reduced word chosen by stripping random left descents.
std::vector<int> random_reduced_word(const Permutation& x, std::mt19937_64& rng);
/// Fold hecke_act letter by letter (rightmost first) onto y.
Permutation demazure_oracle(const Permutation& x, const Permutation& y);
Permutation demazure_oracle(const std::vector<int>& word, const Permutation& y);

/// t_i^2 = t_i, braid and distant commutation relations, checked on every
/// basis element of H_0(n).
Report verify_hecke_relations(int n, bool mutated = false);

}  // namespace flagschur
