#pragma once

// Exact arithmetic in Z[q].

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagschur {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Integer polynomial in q, stored as ascending coefficients with no
/// trailing zeros. The zero polynomial has degree -1.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long long c);  // NOLINT(google-explicit-constructor): constants read naturally
  QPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly q() { return monomial(1, 1); }
  static QPoly monomial(const BigInt& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& x) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  QPoly operator-() const;
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Human-readable form such as "q^2+q+1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// [m] = q^{m-1} + ... + q + 1; [0] = 0.
QPoly quantum_int(int m);
/// [m]! = [m][m-1]...[1]; [0]! = 1.
QPoly quantum_factorial(int m);
/// Gaussian binomial coefficient; the number of k-subspaces of F_q^n.
QPoly gaussian_binomial(int n, int k);
/// Number of flags of type d in F_q^{|d|}: [r]! / prod [d_i]!.
QPoly gaussian_multinomial(const std::vector<int>& parts);

/// Determinant of a square integer matrix (fraction-free elimination).
BigInt determinant(std::vector<std::vector<BigInt>> m);

/// Raised when point counts do not come from an integer polynomial of the
/// promised degree. Always a bug upstream; never rounded away.
class InterpolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  BigInt x;
  BigInt y;
};

/// The unique polynomial of degree <= degree_bound through the first
/// degree_bound+1 points. Remaining points are held out and must be
/// reproduced exactly. Throws InterpolationError on a non-integral
/// coefficient or a held-out mismatch, std::invalid_argument on too few
/// points or repeated abscissae.
QPoly interpolate(std::span<const Point> points, int degree_bound);

}  // namespace flagschur
