#pragma once

// The generic algebra G(n,r): e_A * e_B is the open orbit of the support of
// the S_q product. Computed by folding generator words; the degeneration
// order, open and closed orbits, and the idempotents of the matrix block.

#include "flagschur/core.hpp"
#include "flagschur/qschur.hpp"
#include "flagschur/relations.hpp"
#include "flagschur/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flagschur {

enum class TokenKind { E, F, K };

/// E(i,d), F(i,d) or K(d); d is always the right-hand (source) type.
struct Token {
  TokenKind kind = TokenKind::K;
  int i = 0;
  Composition d;

  Composition left_type() const;
  /// The closed orbit e_{i,d}, f_{i,d} or k_d; throws if the token is zero.
  OrbitMatrix matrix() const;
  std::string to_string() const;
  friend bool operator==(const Token&, const Token&) = default;
};

/// Tokens left to right; the rightmost acts first.
using GeneratorWord = std::vector<Token>;

std::string to_string(const GeneratorWord& w);

/// tok * e_A via the single-orbit rule; nullopt when the token's type does
/// not match row_type(A) or the required row is empty.
std::optional<OrbitMatrix> star_generator(const Token& tok, const OrbitMatrix& a);

/// Canonical word whose fold onto k_{col_type(A)} is A: the E-block from the
/// upper segments (largest first), then the F-block from the lower segments
/// (smallest first). A diagonal matrix gives [K(d)].
GeneratorWord word_decompose(const OrbitMatrix& a);

/// Apply the tokens right to left, starting from `start`.
std::optional<OrbitMatrix> fold(const GeneratorWord& w, const OrbitMatrix& start);

/// e_A * e_B in G(n,r); nullopt (zero) when col_type(A) != row_type(B).
std::optional<OrbitMatrix> star(const OrbitMatrix& a, const OrbitMatrix& b);
/// Bilinear extension to integer combinations.
IntElement star(const IntElement& x, const IntElement& y);

/// M <=deg N: N lies in the orbit closure of M. Entrywise comparison of rank
/// matrices; false when the types differ.
bool deg_leq(const OrbitMatrix& m, const OrbitMatrix& nmat);
/// Every orbit reachable from M by line-pair transpositions (the closure).
std::vector<OrbitMatrix> degeneration_closure(const OrbitMatrix& m);
/// Same relation as deg_leq, decided by the move closure.
bool deg_leq_moves(const OrbitMatrix& m, const OrbitMatrix& nmat);

OrbitMatrix open_orbit(const Composition& d, const Composition& e);
OrbitMatrix closed_orbit(const Composition& d, const Composition& e);

/// The unique <=deg-minimal orbit in the S_q support of e_A e_B (nullopt for
/// incompatible types). Throws std::logic_error if there is no unique minimum.
std::optional<OrbitMatrix> open_orbit_oracle(const OrbitMatrix& a, const OrbitMatrix& b);

/// Pair l of the j-sorted listing becomes (i_{sigma(l)}, j_l). sigma holds
/// 1-based images of 1..r.
OrbitMatrix sigma_twist(const std::vector<int>& sigma, const OrbitMatrix& base);

OrbitMatrix omega(const OrbitMatrix& a);
/// Block-diagonal assembly.
OrbitMatrix phi_embed(const std::vector<OrbitMatrix>& blocks);
/// Block-diagonal open orbits on the slices of d cut by nbar.
OrbitMatrix nested_idempotent(const Composition& d, const Composition& nbar);

/// The word of A multiplied out in S_q and specialized at q = 0.
IntElement psi_image(const OrbitMatrix& a);

IntElement evaluate_relation_0(const RelationInstance<BigInt>& rel, int n, int r);
Report verify_relations_0(int n, int r, CommutatorForm form = CommutatorForm::EiFj_minus_FjEi,
                          bool flip_lambda = false);

/// Complement block of S_0(2,r): orthogonality of k_d - o_d, the
/// preprojective relation at every vertex, and its dimension.
Report preprojective_check(int r);

/// Hasse diagram of <=deg on the (d,e) block, edges pointing towards the
/// more degenerate orbit.
std::string hasse_dot(const Composition& d, const Composition& e);

/// Rank over Q of a family of integer combinations.
int rank_over_q(const std::vector<IntElement>& xs);

}  // namespace flagschur
