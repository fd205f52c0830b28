#include "flagschur/polyq.hpp"

#include <sstream>

namespace flagschur {

QPoly::QPoly(long long c) : coeffs_{BigInt(c)} { trim(); }
QPoly::QPoly(const BigInt& c) : coeffs_{c} { trim(); }
QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const BigInt& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt QPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigInt c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? '-' : '+');
    }
    first = false;
    if (k == 0 || c != 1) os << c;
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

QPoly quantum_int(int m) {
  if (m < 0) throw std::invalid_argument("quantum_int: negative argument");
  return QPoly(std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(1)));
}

QPoly quantum_factorial(int m) {
  if (m < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  QPoly out(1);
  for (int k = 2; k <= m; ++k) out *= quantum_int(k);
  return out;
}

namespace {

// Exact division by a monic-leading divisor whose quotient is known to be
// integral.
QPoly exact_divide(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<BigInt> rem = num.coeffs();
  const int dd = den.degree();
  const BigInt& lead = den.coeffs().back();
  if (num.degree() < dd) {
    if (num.is_zero()) return QPoly();
    throw std::logic_error("exact_divide: not divisible");
  }
  std::vector<BigInt> quo(static_cast<std::size_t>(num.degree() - dd + 1));
  for (int k = num.degree() - dd; k >= 0; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k + dd)];
    if (top % lead != 0) throw std::logic_error("exact_divide: not divisible");
    BigInt c = top / lead;
    quo[static_cast<std::size_t>(k)] = c;
    for (int t = 0; t <= dd; ++t) rem[static_cast<std::size_t>(k + t)] -= c * den.coeffs()[static_cast<std::size_t>(t)];
  }
  for (const auto& c : rem) {
    if (c != 0) throw std::logic_error("exact_divide: not divisible");
  }
  return QPoly(std::move(quo));
}

}  // namespace

QPoly gaussian_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return QPoly();
  return exact_divide(quantum_factorial(n), quantum_factorial(k) * quantum_factorial(n - k));
}

QPoly gaussian_multinomial(const std::vector<int>& parts) {
  int r = 0;
  QPoly den(1);
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("gaussian_multinomial: negative part");
    r += p;
    den *= quantum_factorial(p);
  }
  return exact_divide(quantum_factorial(r), den);
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(m[sel], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

QPoly interpolate(std::span<const Point> points, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("interpolate: negative degree bound");
  const std::size_t m = static_cast<std::size_t>(degree_bound) + 1;
  if (points.size() < m) throw std::invalid_argument("interpolate: not enough points");
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (points[a].x == points[b].x) throw std::invalid_argument("interpolate: repeated abscissa");

  // Newton divided differences over Q.
  std::vector<BigRational> dd(m);
  for (std::size_t k = 0; k < m; ++k) dd[k] = BigRational(points[k].y);
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t k = m - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / BigRational(points[k].x - points[k - level].x);
      if (k == level) break;
    }
  }
  // Expand the Newton form into monomial coefficients.
  std::vector<BigRational> poly(m);
  for (std::size_t k = m; k-- > 0;) {
    // poly = poly * (q - x_k) + dd[k]
    std::vector<BigRational> next(m);
    const BigRational xk(points[k].x);
    for (std::size_t t = 0; t + 1 < m; ++t) next[t + 1] += poly[t];
    for (std::size_t t = 0; t < m; ++t) next[t] -= poly[t] * xk;
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<BigInt> coeffs(m);
  for (std::size_t t = 0; t < m; ++t) {
    if (boost::multiprecision::denominator(poly[t]) != 1) {
      std::ostringstream os;
      os << "interpolate: non-integral coefficient " << poly[t] << " at degree " << t
         << " (degree bound " << degree_bound << ")";
      throw InterpolationError(os.str());
    }
    coeffs[t] = boost::multiprecision::numerator(poly[t]);
  }
  QPoly out(std::move(coeffs));
  for (std::size_t k = m; k < points.size(); ++k) {
    if (out.eval(points[k].x) != points[k].y) {
      std::ostringstream os;
      os << "interpolate: held-out point x=" << points[k].x << " expected " << points[k].y
         << " but polynomial " << out.to_string() << " gives " << out.eval(points[k].x);
      throw InterpolationError(os.str());
    }
  }
  return out;
}

}  // namespace flagschur
