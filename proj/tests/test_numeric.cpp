#include <gtest/gtest.h>

#include <random>

#include "enriques_lab/lattice.hpp"
#include "enriques_lab/numeric.hpp"
#include "enriques_lab/polynomial.hpp"

using namespace enriques_lab;

namespace {

Matrix<Integer> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
  Matrix<Integer> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long long>(rng() % (2 * range + 1)) - range;
  return m;
}

// Cofactor expansion along the first row.
Integer laplace_det(const Matrix<Integer>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer s = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix<Integer> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != k) minor(i - 1, jj++) = m(i, j);
    const Integer t = m(0, k) * laplace_det(minor);
    s += (k % 2 == 0) ? t : Integer(-t);
  }
  return s;
}

// Rank over Q with plain rational Gaussian elimination.
std::size_t gauss_rank(const Matrix<Integer>& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST(Arithmetic, FloorCeilAndSqrt) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(floor(Rational(-1, 3)), -1);
  EXPECT_EQ(ceil(Rational(-1, 3)), 0);
  EXPECT_EQ(floor_sqrt(Integer(32)), 5);
  EXPECT_EQ(floor_sqrt(Integer(36)), 6);
  EXPECT_EQ(floor_sqrt(Integer(0)), 0);
  EXPECT_EQ(mod(-5, 3), 1);
}

TEST(Arithmetic, ExtendedGcd) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Integer a = static_cast<long long>(rng() % 2001) - 1000, b = static_cast<long long>(rng() % 2001) - 1000;
    Integer s, t;
    const Integer g = ext_gcd(a, b, s, t);
    EXPECT_EQ(a * s + b * t, g);
    EXPECT_EQ(g, gcd(a, b));
  }
  std::vector<Integer> v{12, -18, 30};
  EXPECT_EQ(gcd_of(v), 6);
}

TEST(Matrices, DeterminantAgreesWithCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 1 + rng() % 5;
    const auto m = random_matrix(rng, n, n, 6);
    EXPECT_EQ(determinant(m), laplace_det(m));
  }
}

TEST(Matrices, RankAgreesWithRationalElimination) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100; ++k) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    auto m = random_matrix(rng, r, c, 3);
    if (r > 2) {
      // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j) - m(1, j);
    }
    EXPECT_EQ(rank(m), gauss_rank(m));
  }
}

TEST(Matrices, KernelVectorsAreAnnihilated) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    const std::size_t r = 1 + rng() % 5, c = 2 + rng() % 6;
    const auto m = random_matrix(rng, r, c, 4);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size() + rank(m), c);
    for (const auto& v : ker)
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < c; ++j) s += Rational(m(i, j)) * v[j];
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(Matrices, SolveFindsSolutionOrReportsInconsistency) {
  auto a = Matrix<Rational>::from_rows({{1, 2}, {2, 4}});
  std::vector<Rational> b1{3, 6}, b2{3, 7};
  auto x = solve(a, b1);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + 2 * (*x)[1], 3);
  EXPECT_FALSE(solve(a, b2).has_value());
}

TEST(Matrices, ReduceRowGivesUnimodularTransform) {
  std::vector<Integer> a{6, 10, 15};
  const auto cr = reduce_row(a);
  EXPECT_EQ(cr.gcd, 1);
  EXPECT_EQ(abs(determinant(cr.transform)), 1);
  for (std::size_t j = 0; j < 3; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += a[i] * cr.transform(i, j);
    EXPECT_EQ(s, j == 0 ? Integer(1) : Integer(0));
  }
}

TEST(Matrices, RaggedRowsRejected) {
  EXPECT_THROW(Matrix<Integer>::from_rows({{1, 2}, {3}}), DimensionMismatch);
}

TEST(SpanMod, SmallCases) {
  std::vector<std::vector<Integer>> gens{{1, 1, 0}};
  std::vector<Integer> yes{3, 3, 2}, no{1, 0, 0};
  EXPECT_TRUE(in_span_mod(gens, yes, 2));
  EXPECT_FALSE(in_span_mod(gens, no, 2));
  // composite modulus: 2x = 2 (mod 4) but 2x != 1
  std::vector<std::vector<Integer>> g4{{2}};
  std::vector<Integer> t2{2}, t1{1};
  EXPECT_TRUE(in_span_mod(g4, t2, 4));
  EXPECT_FALSE(in_span_mod(g4, t1, 4));
  EXPECT_THROW(in_span_mod(g4, t1, 1), PreconditionError);
}

TEST(Lattices, HyperbolicPlaneAndLll) {
  const Lattice u = Lattice::from_rows({{0, 1}, {1, 0}}, "U");
  EXPECT_EQ(u.determinant(), -1);
  EXPECT_EQ(u.square({Integer(1), Integer(1)}), 2);
  EXPECT_THROW(Lattice::from_rows({{0, 1}, {2, 0}}, "bad"), InvalidClass);
  const auto g = Matrix<Integer>::from_rows({{5, 4}, {4, 5}});
  const auto t = lll_reduce(g);
  EXPECT_EQ(abs(determinant(t)), 1);
  const auto r = congruent(t, g);
  EXPECT_EQ(determinant(r), determinant(g));
  EXPECT_LE(r(0, 0), 2);
}

TEST(Polynomials, ParseArithmeticAndSubstitute) {
  const auto names = indexed_names("x", 3);
  const Polynomial p = parse_polynomial(names, "x0^2 - 2*x1*x2 + 3");
  const Polynomial q = parse_polynomial(names, "(x0 - x1)*(x0 + x1)");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_TRUE(q.is_homogeneous());
  EXPECT_EQ(q, parse_polynomial(names, "x0^2 - x1^2"));
  EXPECT_EQ(p.evaluate({1, 2, 3}), Rational(1 - 12 + 3));
  const Polynomial s = q.substitute({Polynomial::variable(3, 1), Polynomial::variable(3, 0), Polynomial::variable(3, 2)});
  EXPECT_EQ(s, -q);
  EXPECT_TRUE(proportional(q, Rational(-5, 2) * q));
  EXPECT_FALSE(proportional(q, p));
  EXPECT_THROW(parse_polynomial(names, "x3 + 1"), Error);
}

TEST(Polynomials, CoefficientVectorsRoundTrip) {
  const auto basis = monomials_of_degree(4, 3);
  EXPECT_EQ(basis.size(), 20u);
  const Polynomial p = Rational(1, 2) * parse_polynomial(indexed_names("s", 4), "s0^3 - 7*s1*s2*s3 + 2*s3^3");
  EXPECT_EQ(from_coefficients(coefficient_vector(p, basis), basis), p);
  EXPECT_EQ(extend_ring(p, 6).nvars(), 6u);
}
