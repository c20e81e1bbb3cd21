#ifndef ENRIQUES_LAB_NUMERIC_HPP
#define ENRIQUES_LAB_NUMERIC_HPP

// Exact integer / rational arithmetic and the small amount of linear algebra
// the rest of the library is built on. Nothing in here touches floating point.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace enriques_lab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error hierarchy. The CLI maps InputError/SchemaError to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidClass : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct SchemaError : Error {
  using Error::Error;
};
struct InputError : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  return -floor_div(-a, b);
}

inline Integer floor(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

inline Integer ceil(const Rational& q) {
  return ceil_div(numerator(q), denominator(q));
}

/// Largest integer s with s*s <= n. Requires n >= 0.
inline Integer floor_sqrt(const Integer& n) {
  if (n < 0) throw PreconditionError("floor_sqrt of a negative integer");
  return boost::multiprecision::sqrt(n);
}

/// floor(sqrt(q)) for a nonnegative rational q = a/b, via isqrt(a*b)/b.
inline Integer floor_sqrt(const Rational& q) {
  if (q < 0) throw PreconditionError("floor_sqrt of a negative rational");
  const Integer a = numerator(q);
  const Integer b = denominator(q);
  return floor_sqrt(Integer(a * b)) / b;
}

inline Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer l = a / gcd(a, b) * b;
  return l < 0 ? Integer(-l) : l;
}

inline Integer mod(const Integer& a, const Integer& n) {
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

/// Extended Euclid: returns g = gcd(a,b) >= 0 and sets s,t with s*a + t*b = g.
inline Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer old_r = a, r = b;
  Integer old_s = 1, cur_s = 0;
  Integer old_t = 0, cur_t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

inline Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw DimensionMismatch("appended row has wrong length");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// ---------------------------------------------------------------------------
// Fraction-free (Bareiss) elimination.

struct EchelonForm {
  Matrix<Integer> matrix;             // row echelon form, integer entries
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
  int sign = 1;                       // parity of row swaps
};

/// Bareiss elimination to row echelon form. Every intermediate entry is a
/// minor of the input, so all divisions are exact.
inline EchelonForm fraction_free_echelon(Matrix<Integer> m) {
  EchelonForm out;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      out.sign = -out.sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer num = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        if (num % prev != 0) throw Error("Bareiss elimination produced an inexact division");
        m(i, j) = num / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    out.pivots.push_back(c);
    ++r;
  }
  out.matrix = std::move(m);
  return out;
}

inline Integer determinant(const Matrix<Integer>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  EchelonForm e = fraction_free_echelon(m);
  if (e.pivots.size() < m.rows()) return 0;
  // Bareiss: the last pivot is the determinant (up to the swap sign).
  return e.sign * e.matrix(m.rows() - 1, m.cols() - 1);
}

/// Integer row echelon form where every row is kept primitive (divided by its
/// content) and the pivot is the smallest nonzero entry of its column. Entries
/// stay far smaller than Bareiss minors on tall sparse systems. The row space
/// over Q is the same, so rank and kernel agree with Bareiss.
inline EchelonForm primitive_echelon(Matrix<Integer> m) {
  EchelonForm out;
  auto make_primitive = [&](std::size_t i, std::size_t from) {
    Integer g = 0;
    for (std::size_t j = from; j < m.cols() && g != 1; ++j) g = gcd(g, m(i, j));
    if (g > 1)
      for (std::size_t j = from; j < m.cols(); ++j) m(i, j) /= g;
  };
  for (std::size_t i = 0; i < m.rows(); ++i) make_primitive(i, 0);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (m(i, c) != 0 && (p == m.rows() || abs(m(i, c)) < abs(m(p, c)))) p = i;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      out.sign = -out.sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Integer g = gcd(m(r, c), m(i, c));
      const Integer a = m(r, c) / g, b = m(i, c) / g;
      for (std::size_t j = c + 1; j < m.cols(); ++j) m(i, j) = a * m(i, j) - b * m(r, j);
      m(i, c) = 0;
      make_primitive(i, c + 1);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.matrix = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix<Integer>& m) {
  return primitive_echelon(m).pivots.size();
}

/// Scales every row by the lcm of its denominators.
inline Matrix<Integer> clear_denominators(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = m(i, j) * l;
      out(i, j) = numerator(scaled);
    }
  }
  return out;
}

inline std::size_t rank(const Matrix<Rational>& m) { return rank(clear_denominators(m)); }

/// Reduced row echelon form over Q, computed from the fraction-free echelon.
struct ReducedEchelon {
  Matrix<Rational> matrix;  // only the nonzero rows
  std::vector<std::size_t> pivots;
};

inline ReducedEchelon reduced_echelon(const Matrix<Integer>& m) {
  EchelonForm e = primitive_echelon(m);
  const std::size_t r = e.pivots.size();
  ReducedEchelon out{Matrix<Rational>(r, m.cols(), Rational(0)), e.pivots};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.matrix(i, j) = Rational(e.matrix(i, j));
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = out.pivots[i];
    const Rational piv = out.matrix(i, pc);
    for (std::size_t j = 0; j < m.cols(); ++j) out.matrix(i, j) /= piv;
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = out.matrix(k, pc);
      if (f == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) out.matrix(k, j) -= f * out.matrix(i, j);
    }
  }
  return out;
}

/// Basis of the right kernel {x : m x = 0} over Q, one vector per free column.
inline std::vector<std::vector<Rational>> kernel_basis(const Matrix<Integer>& m) {
  ReducedEchelon rref = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rref.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < rref.pivots.size(); ++i) v[rref.pivots[i]] = -rref.matrix(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of a x = b over Q, or nullopt when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve(const Matrix<Rational>& a,
                                                  std::span<const Rational> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length mismatch");
  Matrix<Rational> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  ReducedEchelon rref = reduced_echelon(clear_denominators(aug));
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < rref.pivots.size(); ++i) {
    if (rref.pivots[i] == a.cols()) return std::nullopt;
    x[rref.pivots[i]] = rref.matrix(i, a.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------
// Unimodular column reduction of an integer row vector.

struct ColumnReduction {
  Integer gcd;               // a . U = (gcd, 0, ..., 0)
  Matrix<Integer> transform; // U, unimodular
};

/// Finds a unimodular U with a*U = (g, 0, ..., 0), g = gcd(a) >= 0. Columns
/// 1..n-1 of U then form a Z-basis of the integer kernel of a.
inline ColumnReduction reduce_row(std::span<const Integer> a) {
  const std::size_t n = a.size();
  std::vector<Integer> v(a.begin(), a.end());
  Matrix<Integer> u = Matrix<Integer>::identity(n);
  for (std::size_t j = 1; j < n; ++j) {
    if (v[j] == 0) continue;
    Integer s, t;
    Integer g = ext_gcd(v[0], v[j], s, t);
    const Integer p = v[0] / g;
    const Integer q = v[j] / g;
    // [col0 colj] <- [col0 colj] * [[s, -q], [t, p]]  (determinant 1)
    for (std::size_t i = 0; i < n; ++i) {
      Integer c0 = u(i, 0) * s + u(i, j) * t;
      Integer cj = -u(i, 0) * q + u(i, j) * p;
      u(i, 0) = std::move(c0);
      u(i, j) = std::move(cj);
    }
    v[0] = g;
    v[j] = 0;
  }
  if (v[0] < 0) {
    v[0] = -v[0];
    for (std::size_t i = 0; i < n; ++i) u(i, 0) = -u(i, 0);
  }
  return {v[0], std::move(u)};
}

// ---------------------------------------------------------------------------
// Membership in span_Z(generators) + n Z^k.

/// Decides whether target lies in span_Z(generators) + n*Z^k. Works in
/// (Z/n)^k with a Howell-style echelon: after a pivot with entry p is fixed,
/// the row multiplied by n/gcd(p,n) (which vanishes in the pivot column) is
/// fed back into the pool, so composite moduli are handled correctly. For
/// prime n this is plain Gaussian elimination over the field with n elements.
inline bool in_span_mod(const std::vector<std::vector<Integer>>& generators,
                        std::span<const Integer> target, const Integer& n) {
  if (n < 2) throw PreconditionError("modulus must be >= 2");
  const std::size_t k = target.size();
  std::vector<std::vector<Integer>> pool;
  pool.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != k) throw DimensionMismatch("generator length mismatch");
    std::vector<Integer> r(k);
    for (std::size_t j = 0; j < k; ++j) r[j] = mod(g[j], n);
    pool.push_back(std::move(r));
  }
  std::vector<std::vector<Integer>> pivots(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Integer> piv;
    std::vector<std::vector<Integer>> rest;
    for (auto& r : pool) {
      if (r[c] == 0) {
        rest.push_back(std::move(r));
        continue;
      }
      if (piv.empty()) {
        piv = std::move(r);
        continue;
      }
      Integer s, t;
      const Integer g = ext_gcd(piv[c], r[c], s, t);
      const Integer a = piv[c] / g;
      const Integer b = r[c] / g;
      std::vector<Integer> new_piv(k), new_r(k);
      for (std::size_t j = 0; j < k; ++j) {
        new_piv[j] = mod(s * piv[j] + t * r[j], n);
        new_r[j] = mod(b * piv[j] - a * r[j], n);
      }
      piv = std::move(new_piv);
      rest.push_back(std::move(new_r));
    }
    if (!piv.empty()) {
      const Integer ann = n / gcd(piv[c], n);
      std::vector<Integer> extra(k);
      bool nonzero = false;
      for (std::size_t j = 0; j < k; ++j) {
        extra[j] = mod(ann * piv[j], n);
        nonzero = nonzero || extra[j] != 0;
      }
      if (nonzero) rest.push_back(std::move(extra));
      pivots[c] = std::move(piv);
    }
    pool = std::move(rest);
  }
  std::vector<Integer> d(k);
  for (std::size_t j = 0; j < k; ++j) d[j] = mod(target[j], n);
  for (std::size_t c = 0; c < k; ++c) {
    if (d[c] == 0) continue;
    if (pivots[c].empty()) return false;
    // Solve x * p == d[c] (mod n).
    Integer s, t;
    const Integer g = ext_gcd(pivots[c][c], n, s, t);
    if (d[c] % g != 0) return false;
    const Integer x = mod(s * (d[c] / g), n);
    for (std::size_t j = 0; j < k; ++j) d[j] = mod(d[j] - x * pivots[c][j], n);
  }
  return true;
}

template <class T>
std::string to_string(const T& v) {
  return v.str();
}

}  // namespace enriques_lab

#endif  // ENRIQUES_LAB_NUMERIC_HPP
