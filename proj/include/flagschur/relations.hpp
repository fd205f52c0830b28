#pragma once

// The defining relations of the quiver presentation, instantiated at each
// vertex K_d as explicit linear combinations of paths.

#include "flagschur/core.hpp"
#include "flagschur/polyq.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flagschur {

/// One arrow E_i or F_i of the quiver; the source vertex is implied by the
/// letters to its right.
struct Letter {
  char kind = 'E';  // 'E' or 'F'
  int i = 1;
};

template <class Coeff>
struct PathTerm {
  Coeff coeff;
  std::vector<Letter> letters;  // left to right; the rightmost acts first
};

/// K_target (sum of paths + k_coeff K_d) K_d.
template <class Coeff>
struct RelationInstance {
  std::string name;
  Composition d;
  Composition target;
  std::vector<PathTerm<Coeff>> paths;
  Coeff k_coeff{};
};

/// Type reached by following the letters from d, or nullopt if some arrow
/// is zero (E_i needs d_{i+1} > 0, F_i needs d_i > 0).
std::optional<Composition> path_end(const std::vector<Letter>& letters, const Composition& d);

enum class SerreMutation { None, MiddleCoefficient };

/// P_ij, N_ij (i != j) and C_ij over Z[q] at every d in D(n,r). With
/// MiddleCoefficient the (q+1) of the Serre relations becomes (q+2).
std::vector<RelationInstance<QPoly>> relations_q(int n, int r, SerreMutation mutation = SerreMutation::None);

/// Which commutator is used for C_ij(0).
enum class CommutatorForm {
  EiFj_minus_FjEi,  // the q = 0 value of C_ij
  EiFj_minus_FiEj,  // the literal alternative, differs for i != j
};

/// P_ij(0), N_ij(0), C_ij(0) at every d in D(n,r). flip_lambda negates
/// lambda_ij(d).
std::vector<RelationInstance<BigInt>> relations_0(int n, int r, CommutatorForm form, bool flip_lambda = false);

/// lambda_ij(d) for i = j: 1 if d_i > d_{i+1} = 0, -1 if d_{i+1} > d_i = 0,
/// 0 otherwise.
int lambda_coefficient(const Composition& d, int i);

std::string letters_to_string(const std::vector<Letter>& letters);

}  // namespace flagschur
