#pragma once

// Enumerative linear algebra over small prime fields: subspaces in reduced
// echelon form, flags, relative position, and the point-counting oracles
// behind every polynomial identity in the library.

#include "flagschur/core.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace flagschur {

inline constexpr int kMaxAmbient = 8;
using FqVec = std::array<std::uint8_t, kMaxAmbient>;

/// Thrown when a request exceeds the desk-scale limits (r > 4, p > 19)
/// without an explicit opt-in.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The primes 2, 3, 5, ..., 19.
const std::vector<int>& supported_primes();
bool is_supported_prime(int p);
/// Throws std::invalid_argument for primes outside supported_primes().
void require_supported_prime(int p);
/// Throws ResourceLimitError when r > 4 (unless allow_large) or the ambient
/// dimension exceeds kMaxAmbient.
void check_desk_scale(int r, bool allow_large = false);

/// Subspace of F_p^ambient, canonically stored as its reduced row-echelon
/// basis so equal subspaces compare equal bytewise.
class FqSubspace {
 public:
  FqSubspace() = default;
  FqSubspace(int p, int ambient);

  static FqSubspace span(int p, int ambient, std::span<const FqVec> generators);
  static FqSubspace whole(int p, int ambient);

  int p() const { return p_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  std::span<const FqVec> basis() const { return {rows_.data(), static_cast<std::size_t>(dim_)}; }
  int pivot(int k) const { return pivots_[static_cast<std::size_t>(k)]; }

  /// v reduced modulo this subspace (zero iff v lies in it).
  FqVec reduce(FqVec v) const;
  bool contains(const FqVec& v) const;
  bool contains(const FqSubspace& w) const;

  FqSubspace sum(const FqSubspace& w) const;
  FqSubspace intersect(const FqSubspace& w) const;

  friend bool operator==(const FqSubspace&, const FqSubspace&) = default;
  friend auto operator<=>(const FqSubspace&, const FqSubspace&) = default;

 private:
  int p_ = 2;
  int ambient_ = 0;
  int dim_ = 0;
  std::array<FqVec, kMaxAmbient> rows_{};
  std::array<int, kMaxAmbient> pivots_{};
};

/// All subspaces of F_p^ambient of the given dimension, in a fixed order.
/// Results are cached for the lifetime of the process.
const std::vector<FqSubspace>& enumerate_subspaces(int p, int ambient, int dim);
/// All subspaces of the given dimension containing `base`.
std::vector<FqSubspace> subspaces_containing(const FqSubspace& base, int dim);

/// All subspaces W of the given dimension with base <= W <= top.
std::vector<FqSubspace> subspaces_between(const FqSubspace& base, const FqSubspace& top, int dim);

/// Square matrix over F_p acting on column vectors.
struct FqMatrix {
  int p = 2;
  int dim = 0;
  std::array<FqVec, kMaxAmbient> rows{};
  FqVec apply(const FqVec& v) const;
};

FqMatrix random_invertible(int p, int dim, std::mt19937_64& rng);

/// n-step flag 0 = V_0 <= V_1 <= ... <= V_n = F_p^r.
class FqFlag {
 public:
  FqFlag() = default;
  /// Steps V_1..V_n; throws std::invalid_argument if not nested or if the
  /// last step is not the whole space.
  explicit FqFlag(std::vector<FqSubspace> steps);

  int n() const { return static_cast<int>(steps_.size()); }
  int p() const { return steps_.front().p(); }
  int ambient_dim() const { return steps_.front().ambient_dim(); }
  /// V_i for 1 <= i <= n; V_0 is the zero subspace.
  const FqSubspace& step(int i) const { return steps_.at(static_cast<std::size_t>(i - 1)); }
  int step_dim(int i) const { return i <= 0 ? 0 : step(i).dim(); }
  Composition type() const;
  /// Basis whose first dim(V_i) vectors span V_i, for every i.
  const std::vector<FqVec>& adapted_basis() const { return adapted_; }

  FqFlag transformed(const FqMatrix& g) const;
  /// Stepwise sum and intersection of two flags in the same space.
  FqFlag operator+(const FqFlag& other) const;
  FqFlag intersect(const FqFlag& other) const;

  friend bool operator==(const FqFlag& a, const FqFlag& b) { return a.steps_ == b.steps_; }

 private:
  std::vector<FqSubspace> steps_;
  std::vector<FqVec> adapted_;
};

/// Every flag of the given type in F_p^{|type|}, each exactly once.
std::vector<FqFlag> enumerate_flags(int p, const Composition& type);
void for_each_flag(int p, const Composition& type, const std::function<void(const FqFlag&)>& fn);

/// A_ij = dim(V_{i-1} + V_i cap V'_j) - dim(V_{i-1} + V_i cap V'_{j-1}),
/// evaluated literally with subspace sums and intersections.
OrbitMatrix relative_position(const FqFlag& f, const FqFlag& g);
/// Same matrix, computed from intersection dimensions by inclusion-exclusion.
OrbitMatrix relative_position_by_ranks(const FqFlag& f, const FqFlag& g);
/// Writes dim(V_i cap V'_j) for 1 <= i, j <= n into out (row-major).
void intersection_dims(const FqFlag& f, const FqFlag& g, std::span<int> out);

/// Coordinate flag pair in orbit e_A: line pair l = (i_l, j_l) contributes
/// the basis vector x_l to the left flag from step i_l and to the right flag
/// from step j_l.
std::pair<FqFlag, FqFlag> standard_flag_pair(const OrbitMatrix& a, int p);

/// |S(A, A2, A3)| over F_p: middle flags f with (f1, f) in e_A and (f, f2) in
/// e_A2, for the standard representative (f1, f2) of e_A3. Incompatible types
/// give 0.
std::int64_t count_middle_flags(const OrbitMatrix& a, const OrbitMatrix& a2,
                                const OrbitMatrix& a3, int p);
/// Same count for an explicitly supplied representative of e_A3.
std::int64_t count_middle_flags(const OrbitMatrix& a, const OrbitMatrix& a2,
                                const FqFlag& f1, const FqFlag& f2);

/// The same count when A, A2 and A3 are all upper triangular. Then every
/// middle flag sits stepwise between f2 and f1, so only those flags are
/// enumerated. Throws std::invalid_argument otherwise.
std::int64_t count_nested_middle_flags(const OrbitMatrix& a, const OrbitMatrix& a2,
                                       const OrbitMatrix& a3, int p);

/// Concrete realization of a quiver representation over F_p: each summand
/// contributes one basis vector at each vertex of its segment, and the arrow
/// v -> v+1 maps it to its successor (or to zero past the segment's end).
class FqQuiverRep {
 public:
  FqQuiverRep(const QuiverRep& iso, int p);
  int n() const { return n_; }
  int p() const { return p_; }
  int dim(int v) const { return static_cast<int>(coords_[static_cast<std::size_t>(v - 1)].size()); }
  /// Image of v under the composite map from vertex `from` to vertex `to`.
  FqVec map(int from, int to, const FqVec& v) const;

 private:
  int n_;
  int p_;
  std::vector<Segment> summands_;
  // coords_[v-1][k] = index of the summand owning basis vector k at vertex v.
  std::vector<std::vector<int>> coords_;
};

/// Number of subrepresentations X of the realization of L with X ~ N and
/// L/X ~ M. Zero on dimension mismatch.
std::int64_t count_submodules(const QuiverRep& l, const QuiverRep& m, const QuiverRep& nrep, int p);

}  // namespace flagschur
