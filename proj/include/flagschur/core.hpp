#pragma once

// Flag types, orbit matrices, line pairs and segments of the linear quiver.
//
// All mathematical indices (vertices, matrix rows/columns, segment ends) are
// 1-based, matching the usual notation; raw storage is 0-based.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flagschur {

/// An ordered decomposition of r into n non-negative parts (the type of an
/// n-step flag).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  /// The unit vector alpha_i in n parts.
  static Composition unit(int n, int i);

  int n() const { return static_cast<int>(parts_.size()); }
  int r() const { return r_; }
  int operator()(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& parts() const { return parts_; }

  /// d + alpha_plus - alpha_minus. Either index may be 0 or n+1, which stands
  /// for "no change". Returns nullopt when a part would become negative.
  std::optional<Composition> shifted(int plus, int minus) const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int r_ = 0;
};

/// All compositions of r into n parts, ascending lexicographic order.
std::vector<Composition> compositions(int n, int r);

/// n x n matrix of non-negative integers labelling a GL(V)-orbit of flag
/// pairs. Row sums give the left flag type, column sums the right one.
class OrbitMatrix {
 public:
  OrbitMatrix() = default;
  /// Row-major entries; throws std::invalid_argument on negative entries or
  /// wrong size.
  OrbitMatrix(int n, std::vector<int> entries);
  OrbitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static OrbitMatrix diagonal(const Composition& d);
  static OrbitMatrix zero(int n);

  int n() const { return n_; }
  int r() const { return r_; }
  int operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
  }
  const std::vector<int>& entries() const { return entries_; }

  Composition row_type() const;
  Composition col_type() const;

  bool is_diagonal() const;
  /// No entries below the diagonal (the orbit [f,f'] with f' inside f).
  bool is_upper() const;
  /// No entries above the diagonal.
  bool is_lower() const;
  bool is_permutation() const;

  /// A + E_{add_i,add_j} - E_{sub_i,sub_j}; nullopt if an entry goes negative.
  std::optional<OrbitMatrix> moved(int add_i, int add_j, int sub_i, int sub_j) const;
  OrbitMatrix plus(const OrbitMatrix& other) const;
  OrbitMatrix transposed() const;

  friend bool operator==(const OrbitMatrix&, const OrbitMatrix&) = default;
  friend auto operator<=>(const OrbitMatrix& a, const OrbitMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<int> entries_;
};

/// Every orbit matrix of size n with entry sum r (lexicographic in the
/// row-major entries).
std::vector<OrbitMatrix> orbit_matrices(int n, int r);
/// The (d,e) block: matrices with row sums d and column sums e.
std::vector<OrbitMatrix> orbit_matrices(const Composition& d, const Composition& e);

/// n x n prefix sums r_ij = sum_{a<=i, b<=j} A_ab, row-major. For a flag
/// pair this is dim(V_i cap V'_j).
std::vector<int> rank_matrix(const OrbitMatrix& a);

/// One indecomposable summand N_ij of a flag pair: a basis line entering the
/// left flag at step i and the right flag at step j.
struct LinePair {
  int i = 1;
  int j = 1;
  friend bool operator==(const LinePair&, const LinePair&) = default;
};

/// Multiset of r line pairs, canonically sorted by j then i.
class LinePairs {
 public:
  LinePairs() = default;
  LinePairs(int n, std::vector<LinePair> pairs);

  int n() const { return n_; }
  int r() const { return static_cast<int>(pairs_.size()); }
  const std::vector<LinePair>& pairs() const { return pairs_; }
  const LinePair& operator[](std::size_t l) const { return pairs_[l]; }

  friend bool operator==(const LinePairs&, const LinePairs&) = default;

 private:
  int n_ = 0;
  std::vector<LinePair> pairs_;
};

LinePairs pairs_from_matrix(const OrbitMatrix& a);
OrbitMatrix matrix_from_pairs(const LinePairs& pairs);

/// Interval [lo, hi] of vertices of the linear quiver 1 -> 2 -> ... -> n;
/// stands for the indecomposable representation supported there.
struct Segment {
  int lo = 1;
  int hi = 1;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// M_s <= M_t iff s.hi < t.hi, or s.hi == t.hi and s.lo <= t.lo.
bool segment_leq(const Segment& s, const Segment& t);
/// Strict version of segment_leq, used for sorting.
bool segment_less(const Segment& s, const Segment& t);

/// Isomorphism class of a representation of the linear quiver on n vertices,
/// stored as its multiset of indecomposable summands in segment order.
class QuiverRep {
 public:
  QuiverRep() = default;
  QuiverRep(int n, std::vector<Segment> summands);

  int n() const { return n_; }
  const std::vector<Segment>& summands() const { return summands_; }
  std::size_t size() const { return summands_.size(); }
  bool empty() const { return summands_.empty(); }
  int multiplicity(const Segment& s) const;
  /// Dimension at each vertex (index v-1).
  std::vector<int> dim_vector() const;
  /// rank_{ij} of the composite map from vertex i to vertex j (i <= j),
  /// i.e. number of summands containing [i, j].
  int rank(int i, int j) const;

  std::string to_string() const;

  friend bool operator==(const QuiverRep&, const QuiverRep&) = default;
  friend auto operator<=>(const QuiverRep& a, const QuiverRep& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.summands_.size() <=> b.summands_.size(); c != 0) return c;
    for (std::size_t k = 0; k < a.summands_.size(); ++k) {
      const auto& s = a.summands_[k];
      const auto& t = b.summands_[k];
      if (auto c = s.hi <=> t.hi; c != 0) return c;
      if (auto c = s.lo <=> t.lo; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  int n_ = 0;
  std::vector<Segment> summands_;
};

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

/// Summands of f / (f cap f'): entry A_ij with i < j gives A_ij copies of
/// [i, j-1].
QuiverRep upper_segments(const OrbitMatrix& a);
/// Summands of f' / (f cap f'): entry A_ij with i > j gives A_ij copies of
/// [j, i-1].
QuiverRep lower_segments(const OrbitMatrix& a);

}  // namespace flagschur
