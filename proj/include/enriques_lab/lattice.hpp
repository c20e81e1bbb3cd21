#ifndef ENRIQUES_LAB_LATTICE_HPP
#define ENRIQUES_LAB_LATTICE_HPP

#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace enriques_lab {

/// A free Z-module with a symmetric integer Gram matrix.
class Lattice {
 public:
  Lattice() = default;
  Lattice(Matrix<Integer> gram, std::string label) : gram_(std::move(gram)), label_(std::move(label)) {
    if (gram_.rows() != gram_.cols()) throw DimensionMismatch("Gram matrix must be square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      for (std::size_t j = i + 1; j < gram_.cols(); ++j)
        if (gram_(i, j) != gram_(j, i)) throw InvalidClass("Gram matrix is not symmetric");
  }

  static Lattice from_rows(const std::vector<std::vector<long long>>& rows, std::string label) {
    std::vector<std::vector<Integer>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return Lattice(Matrix<Integer>::from_rows(r), std::move(label));
  }

  /// Diagonal lattice diag(d0, d1, ...).
  static Lattice diagonal(const std::vector<long long>& d, std::string label) {
    Matrix<Integer> g(d.size(), d.size(), Integer(0));
    for (std::size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
    return Lattice(std::move(g), std::move(label));
  }

  std::size_t rank() const { return gram_.rows(); }
  const Matrix<Integer>& gram() const { return gram_; }
  const std::string& label() const { return label_; }

  template <class T>
  T pairing(std::span<const T> u, std::span<const T> v) const {
    if (u.size() != rank() || v.size() != rank()) throw DimensionMismatch("vector length differs from lattice rank");
    T s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) s += u[i] * T(gram_(i, j)) * v[j];
    }
    return s;
  }

  Integer pairing(const std::vector<Integer>& u, const std::vector<Integer>& v) const {
    return pairing<Integer>(std::span<const Integer>(u), std::span<const Integer>(v));
  }
  Integer square(const std::vector<Integer>& u) const { return pairing(u, u); }

  Integer determinant() const { return enriques_lab::determinant(gram_); }

 private:
  Matrix<Integer> gram_;
  std::string label_;
};

/// Gram matrix of a family of vectors under a bilinear form given as a callable.
template <class V, class F>
Matrix<Integer> gram_of(const std::vector<V>& vs, F&& dot) {
  Matrix<Integer> g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) g(i, j) = g(j, i) = dot(vs[i], vs[j]);
  return g;
}

// ---------------------------------------------------------------------------
// Gram-Schmidt data of a positive definite Gram matrix:
//   x^T G x = sum_i D_i (x_i + sum_{j>i} mu(j,i) x_j)^2

struct GramSchmidt {
  Matrix<Rational> mu;       // strictly lower triangular part used
  std::vector<Rational> d;   // squared lengths of the orthogonalized vectors
};

inline GramSchmidt gram_schmidt(const Matrix<Integer>& g) {
  const std::size_t n = g.rows();
  GramSchmidt gs{Matrix<Rational>(n, n, Rational(0)), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = Rational(g(i, j));
      for (std::size_t k = 0; k < j; ++k) s -= gs.mu(j, k) * gs.mu(i, k) * gs.d[k];
      gs.mu(i, j) = s / gs.d[j];
    }
    Rational s = Rational(g(i, i));
    for (std::size_t k = 0; k < i; ++k) s -= gs.mu(i, k) * gs.mu(i, k) * gs.d[k];
    if (s <= 0) throw PreconditionError("Gram matrix is not positive definite");
    gs.d[i] = s;
  }
  return gs;
}

/// Exact LLL reduction (delta = 3/4) of a basis given by its positive definite
/// Gram matrix. Returns the unimodular matrix T whose rows express the reduced
/// basis in terms of the input basis; the reduced Gram is T G T^T.
inline Matrix<Integer> lll_reduce(const Matrix<Integer>& gram_in) {
  const std::size_t n = gram_in.rows();
  Matrix<Integer> g = gram_in;
  Matrix<Integer> t = Matrix<Integer>::identity(n);
  if (n < 2) return t;
  const Rational delta(3, 4);

  // b_k <- b_k - q b_j, applied to T and to the Gram matrix.
  auto size_reduce = [&](std::size_t k, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < n; ++c) t(k, c) -= q * t(j, c);
    const Integer gkk = g(k, k) - 2 * q * g(k, j) + q * q * g(j, j);
    for (std::size_t c = 0; c < n; ++c) {
      if (c == k) continue;
      g(k, c) -= q * g(j, c);
      g(c, k) = g(k, c);
    }
    g(k, k) = gkk;
  };
  auto swap_vectors = [&](std::size_t a, std::size_t b) {
    t.swap_rows(a, b);
    g.swap_rows(a, b);
    for (std::size_t r = 0; r < n; ++r) std::swap(g(r, a), g(r, b));
  };

  std::size_t k = 1;
  GramSchmidt gs = gram_schmidt(g);
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      const Rational m = gs.mu(k, j);
      if (m * 2 > 1 || m * 2 < -1) {
        // nearest integer to mu(k,j)
        const Integer q = floor(m + Rational(1, 2));
        size_reduce(k, j, q);
        gs = gram_schmidt(g);
      }
    }
    if (gs.d[k] >= (delta - gs.mu(k, k - 1) * gs.mu(k, k - 1)) * gs.d[k - 1]) {
      ++k;
    } else {
      swap_vectors(k, k - 1);
      gs = gram_schmidt(g);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return t;
}

inline Matrix<Integer> congruent(const Matrix<Integer>& t, const Matrix<Integer>& g) {
  return t * g * t.transpose();
}

}  // namespace enriques_lab

#endif  // ENRIQUES_LAB_LATTICE_HPP
