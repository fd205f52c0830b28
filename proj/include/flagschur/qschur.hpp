#pragma once

// The q-Schur algebra S_q(n,r) on the orbit basis e_A. Structure constants
// come from counting middle flags over several primes and interpolating.

#include "flagschur/core.hpp"
#include "flagschur/fq.hpp"
#include "flagschur/polyq.hpp"
#include "flagschur/relations.hpp"
#include "flagschur/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flagschur {

inline bool coeff_is_zero(const QPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(const BigInt& c) { return c == 0; }

/// Finite formal sum of orbit basis elements with coefficients in Z[q]
/// (Element) or Z (IntElement). Zero coefficients are never stored.
template <class Coeff>
class BasicElement {
 public:
  BasicElement() = default;
  BasicElement(int n, int r) : n_(n), r_(r) {}

  static BasicElement basis(const OrbitMatrix& a, Coeff c = Coeff(1)) {
    BasicElement x(a.n(), a.r());
    x.add(a, c);
    return x;
  }

  int n() const { return n_; }
  int r() const { return r_; }
  const std::map<OrbitMatrix, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const OrbitMatrix& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add(const OrbitMatrix& a, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    if (a.n() != n_ || a.r() != r_) throw std::invalid_argument("element term has the wrong (n, r)");
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicElement& operator+=(const BasicElement& o) {
    check_same(o);
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
  }
  BasicElement& operator-=(const BasicElement& o) {
    check_same(o);
    for (const auto& [a, c] : o.terms_) add(a, -c);
    return *this;
  }
  BasicElement scaled(const Coeff& s) const {
    BasicElement out(n_, r_);
    for (const auto& [a, c] : terms_) out.add(a, c * s);
    return out;
  }
  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const BasicElement& o) const {
    if (o.n_ != n_ || o.r_ != r_) throw std::invalid_argument("elements of different algebras");
  }
  int n_ = 0;
  int r_ = 0;
  std::map<OrbitMatrix, Coeff> terms_;
};

using Element = BasicElement<QPoly>;
using IntElement = BasicElement<BigInt>;

std::string to_string(const Element& x);
std::string to_string(const IntElement& x);

/// Sum of the diagonal idempotents k_d: the identity of S_q(n,r).
Element identity_element(int n, int r);

// ---------------------------------------------------------------------------
// Structure constants

/// Counters proving that every interpolated constant was cross-checked at a
/// held-out prime.
struct IntegrityStats {
  std::uint64_t interpolations = 0;
  std::uint64_t held_out_checks = 0;
  std::uint64_t flag_evaluations = 0;
};
IntegrityStats integrity_stats();
void reset_integrity_stats();

/// Largest prime the oracles may use (environment SCHUR_PRIME_LIMIT, default
/// 19). Asking for more primes than available raises ResourceLimitError.
int prime_limit();
/// The first `count` supported primes not exceeding prime_limit().
std::vector<int> oracle_primes(int count);

/// Lifts the r <= 4 guard for structure-constant tables in this process.
void set_allow_large(bool allow);
bool allow_large();

/// Degree bound sum_{i<j} e_i e_j for structure constants with middle type e.
int structure_degree_bound(const Composition& e);

/// g_{A,A',A''}; zero for incompatible types.
QPoly structure_constant(const OrbitMatrix& a, const OrbitMatrix& a2, const OrbitMatrix& a3);
/// g_{A,A',A''} for upper-triangular A, A', A'', counted only over middle
/// flags nested between the two outer flags. Not cached; meant for checks at
/// sizes where the full block tables are out of reach.
QPoly nested_structure_constant(const OrbitMatrix& a, const OrbitMatrix& a2, const OrbitMatrix& a3);
/// Degree bound for the nested count: the dimension of the variety of flags
/// of type e squeezed between flags of types d (outer) and f (inner).
int nested_degree_bound(const Composition& d, const Composition& e, const Composition& f);

/// e_A e_B as an element.
Element multiply_basis(const OrbitMatrix& a, const OrbitMatrix& b);
Element multiply(const Element& x, const Element& y);

IntElement specialize(const Element& x, long long q0);
Element lift(const IntElement& x);
/// Product in S_q specialized at q = q0 (q0 = 0 gives S_0(n,r)).
IntElement multiply_at(const IntElement& x, const IntElement& y, long long q0);

// ---------------------------------------------------------------------------
// Generators and closed formulas

/// e_{i,d}: right type d, left type d + alpha_i - alpha_{i+1}. nullopt if
/// d_{i+1} = 0 or i is out of range.
std::optional<OrbitMatrix> e_generator(int i, const Composition& d);
/// f_{i,d}: right type d, left type d - alpha_i + alpha_{i+1}. nullopt if
/// d_i = 0.
std::optional<OrbitMatrix> f_generator(int i, const Composition& d);

enum class GenKind { E, F };

/// The closed product formula for a generator times e_A, where the
/// generator's right type is row_type(A).
Element fundamental_mult(GenKind kind, int h, const OrbitMatrix& a);

// ---------------------------------------------------------------------------
// Hall numbers and the positive part

/// Hall polynomial h^L_{MN}: submodules X of L with X ~ N and L/X ~ M.
QPoly hall_number(const QuiverRep& l, const QuiverRep& m, const QuiverRep& nrep);
int hall_degree_bound(const QuiverRep& l);

/// Every representation of the linear quiver with the given dimension vector.
std::vector<QuiverRep> reps_with_dim(int n, const std::vector<int>& dims);

/// Sum of all e_A with f' inside f and f/f' ~ M, over every diagonal.
Element theta_plus(const QuiverRep& m, int n, int r);

/// Upper-triangular factors whose product in the filtration order equals
/// e_A times prod [m_ij]!; listed left to right. Requires A upper triangular.
std::vector<OrbitMatrix> filtration_chain(const OrbitMatrix& a);
/// prod over segments of [multiplicity]!.
QPoly segment_factorial(const OrbitMatrix& a);

// ---------------------------------------------------------------------------
// The basis B

/// (X1, X2) with e_{X1} = [f1, f1+f2] and e_{X2} = [f1+f2, f2].
std::pair<OrbitMatrix, OrbitMatrix> basis_B_factors(const OrbitMatrix& a);
Element basis_B_expand(const OrbitMatrix& a);
/// Dimensions of the steps of f1 + f2.
std::vector<int> join_dims(const OrbitMatrix& a);

// ---------------------------------------------------------------------------
// Relations

/// Evaluate one relation instance in S_q (paths multiplied via structure
/// constants). Paths not ending at the instance target vanish.
Element evaluate_relation(const RelationInstance<QPoly>& rel, int n, int r);
Report verify_relations_q(int n, int r, SerreMutation mutation = SerreMutation::None);

}  // namespace flagschur
