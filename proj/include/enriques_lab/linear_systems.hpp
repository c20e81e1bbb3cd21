#ifndef ENRIQUES_LAB_LINEAR_SYSTEMS_HPP
#define ENRIQUES_LAB_LINEAR_SYSTEMS_HPP

// Linear systems of degree-d surfaces in P^3 = P(s0, s1, s2, s3) that vanish
// to prescribed orders along lines (or planes). Vanishing to order m along a
// linear space L means every partial derivative of order <= m-1 restricts to
// zero on a parametrization of L; each restriction is linear in the
// coefficients of F, so the system is the kernel of an exact integer matrix.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "polynomial.hpp"

namespace enriques_lab {

inline constexpr std::size_t kP3 = 4;

using ProjPoint = std::vector<Rational>;
using LinearForm = std::vector<Rational>;

inline const std::vector<std::string>& p3_names() {
  static const std::vector<std::string> names{"s0", "s1", "s2", "s3"};
  return names;
}

inline Polynomial linear_polynomial(const LinearForm& f) {
  if (f.size() != kP3) throw SchemaError("a linear form on P^3 needs 4 coefficients");
  Polynomial p(kP3);
  for (std::size_t i = 0; i < kP3; ++i) p += f[i] * Polynomial::variable(kP3, i);
  return p;
}

/// Projective linear subspace spanned by independent points.
struct Flat {
  std::vector<ProjPoint> points;
  std::string label;

  std::size_t dimension() const { return points.size() - 1; }
};

inline Flat make_flat(std::vector<ProjPoint> points, std::string label) {
  if (points.empty()) throw SchemaError("flat " + label + " has no points");
  for (const auto& p : points)
    if (p.size() != kP3) throw SchemaError("point of " + label + " needs 4 homogeneous coordinates");
  if (rank(Matrix<Rational>::from_rows(points)) != points.size())
    throw SchemaError("degenerate flat " + label + ": spanning points are dependent");
  return {std::move(points), std::move(label)};
}

inline Flat line_through(const ProjPoint& p, const ProjPoint& q, std::string label = {}) {
  return make_flat({p, q}, std::move(label));
}

/// Common zero set of linear forms, spanned by a kernel basis.
inline Flat flat_of_forms(const std::vector<LinearForm>& forms, std::string label = {}) {
  for (const auto& f : forms)
    if (f.size() != kP3) throw SchemaError("a linear form on P^3 needs 4 coefficients");
  auto ker = kernel_basis(clear_denominators(Matrix<Rational>::from_rows(forms)));
  if (ker.size() + forms.size() != kP3) throw SchemaError("degenerate flat " + label + ": dependent linear forms");
  if (ker.empty()) throw SchemaError("flat " + label + " is empty");
  return make_flat(std::move(ker), std::move(label));
}

inline Flat line_of_planes(const LinearForm& a, const LinearForm& b, std::string label = {}) {
  return flat_of_forms({a, b}, std::move(label));
}

inline Flat plane_of(const LinearForm& f, std::string label = {}) { return flat_of_forms({f}, std::move(label)); }

/// Images of s0..s3 under t -> sum_j t_j P_j.
inline std::vector<Polynomial> parametrization(const Flat& l) {
  const std::size_t k = l.points.size();
  std::vector<Polynomial> img(kP3, Polynomial(k));
  for (std::size_t i = 0; i < kP3; ++i)
    for (std::size_t j = 0; j < k; ++j) img[i] += l.points[j][i] * Polynomial::variable(k, j);
  return img;
}

struct VanishingCondition {
  Flat flat;
  int order = 1;
};

struct LinSysSpec {
  int degree = 0;
  std::vector<VanishingCondition> conditions;
};

struct CoefficientSpace {
  int degree = 0;
  std::vector<Exponents> monomials;            // graded lex, s0 > s1 > s2 > s3
  std::vector<std::vector<Rational>> kernel;   // basis of the admissible coefficient vectors
  std::size_t condition_rank = 0;

  long long projective_dimension() const { return static_cast<long long>(kernel.size()) - 1; }
  std::vector<Polynomial> members() const {
    std::vector<Polynomial> out;
    for (const auto& v : kernel) out.push_back(from_coefficients(v, monomials));
    return out;
  }
};

/// Partial derivative by the multi-index a.
inline Polynomial partial(const Polynomial& f, const Exponents& a) {
  Polynomial g = f;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < a[i]; ++k) g = g.derivative(i);
  return g;
}

inline std::vector<Exponents> multi_indices_up_to(std::size_t n, int max_order) {
  std::vector<Exponents> out;
  for (int o = 0; o <= max_order; ++o)
    for (auto& e : monomials_of_degree(n, o)) out.push_back(std::move(e));
  return out;
}

/// One row per (condition, derivative, parameter monomial); one column per monomial.
inline Matrix<Integer> condition_matrix(const LinSysSpec& spec) {
  if (spec.degree < 0) throw SchemaError("negative degree");
  const auto monos = monomials_of_degree(kP3, spec.degree);
  Matrix<Integer> m(0, monos.size());
  for (const auto& c : spec.conditions) {
    if (c.order < 1) throw SchemaError("vanishing order must be positive");
    const auto img = parametrization(c.flat);
    const std::size_t k = c.flat.points.size();
    for (const auto& a : multi_indices_up_to(kP3, c.order - 1)) {
      const int d = spec.degree - degree_of(a);
      if (d < 0) continue;
      const auto pmonos = monomials_of_degree(k, d);
      Matrix<Rational> block(pmonos.size(), monos.size(), Rational(0));
      for (std::size_t col = 0; col < monos.size(); ++col) {
        const Polynomial r = partial(Polynomial::monomial(monos[col]), a).substitute(img);
        const auto v = coefficient_vector(r, pmonos);
        for (std::size_t row = 0; row < pmonos.size(); ++row) block(row, col) = v[row];
      }
      const Matrix<Integer> ib = clear_denominators(block);
      for (std::size_t row = 0; row < ib.rows(); ++row) {
        bool zero = true;
        for (const auto& x : ib.row(row)) zero = zero && x == 0;
        if (!zero) m.append_row(ib.row(row));
      }
    }
  }
  return m;
}

inline CoefficientSpace coefficient_space(const LinSysSpec& spec) {
  CoefficientSpace s;
  s.degree = spec.degree;
  s.monomials = monomials_of_degree(kP3, spec.degree);
  const Matrix<Integer> m = condition_matrix(spec);
  if (m.rows() == 0) {
    for (std::size_t i = 0; i < s.monomials.size(); ++i) {
      std::vector<Rational> v(s.monomials.size(), Rational(0));
      v[i] = 1;
      s.kernel.push_back(std::move(v));
    }
    return s;
  }
  s.kernel = kernel_basis(m);
  s.condition_rank = s.monomials.size() - s.kernel.size();
  return s;
}

/// Projective dimension, -1 for an empty system.
inline long long system_dimension(const LinSysSpec& spec) { return coefficient_space(spec).projective_dimension(); }

inline bool vanishes_on(const Polynomial& f, const Flat& l) { return f.substitute(parametrization(l)).is_zero(); }

/// Every member of the system contains the line.
inline bool member_contains_line(const CoefficientSpace& space, const Flat& line) {
  for (const auto& f : space.members())
    if (!vanishes_on(f, line)) return false;
  return true;
}

/// A fixed pseudo-random combination of the basis, standing in for a general member.
inline Polynomial general_member(const CoefficientSpace& space, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  Polynomial f(kP3);
  for (const auto& g : space.members()) f += Rational(static_cast<long long>(1 + rng() % 97)) * g;
  return f;
}

/// F in the affine chart s_j = 1 (j the first nonzero coordinate of the point),
/// translated so the point is the origin. Local coordinates keep the names
/// s_i, i != j.
inline Polynomial localize(const Polynomial& f, const ProjPoint& point) {
  if (point.size() != kP3 || f.nvars() != kP3) throw DimensionMismatch("expected a point and a form on P^3");
  std::size_t j = 0;
  while (j < kP3 && point[j] == 0) ++j;
  if (j == kP3) throw PreconditionError("the zero vector is not a projective point");
  std::vector<Polynomial> img;
  for (std::size_t i = 0; i < kP3; ++i) {
    const Rational c = point[i] / point[j];
    if (i == j) img.push_back(Polynomial::constant(kP3, 1));
    else img.push_back(Polynomial::constant(kP3, c) + Polynomial::variable(kP3, i));
  }
  return f.substitute(img);
}

/// Lowest-order homogeneous part of F at the point.
inline Polynomial tangent_cone(const Polynomial& f, const ProjPoint& point) {
  const Polynomial g = localize(f, point);
  if (g.is_zero()) throw PreconditionError("the form vanishes identically");
  if (g.lowest_degree() == 0) throw PreconditionError("the form does not vanish at the point");
  return g.homogeneous_part(g.lowest_degree());
}

/// The tangent cone of f at the point is a multiple of the cone of `expected`
/// there (both read in the same local chart).
inline bool tangent_cone_matches(const Polynomial& f, const ProjPoint& point, const Polynomial& expected) {
  return proportional(tangent_cone(f, point), tangent_cone(expected, point));
}

/// span(candidates) = span(kernel basis).
inline bool verify_expected_form(const CoefficientSpace& space, const std::vector<Polynomial>& candidates) {
  std::vector<std::vector<Rational>> cand;
  for (const auto& c : candidates) {
    if (c.nvars() != kP3 || !c.is_homogeneous() || (!c.is_zero() && c.degree() != space.degree))
      throw DimensionMismatch("candidate generator is not a form of degree " + std::to_string(space.degree));
    cand.push_back(coefficient_vector(c, space.monomials));
  }
  const auto rk = [](const std::vector<std::vector<Rational>>& rows) -> std::size_t {
    return rows.empty() ? 0 : rank(Matrix<Rational>::from_rows(rows));
  };
  auto both = space.kernel;
  both.insert(both.end(), cand.begin(), cand.end());
  const std::size_t r = rk(both);
  return rk(space.kernel) == r && rk(cand) == r;
}

/// A trihedron: a vertex and three planes through it.
struct Trihedron {
  ProjPoint vertex;
  std::vector<LinearForm> faces;
};

inline void check_trihedron(const Trihedron& t) {
  if (t.faces.size() != 3) throw SchemaError("a trihedron has three faces");
  for (const auto& f : t.faces) {
    Rational v = 0;
    for (std::size_t i = 0; i < kP3; ++i) v += f[i] * t.vertex.at(i);
    if (v != 0) throw SchemaError("trihedron face misses the vertex");
  }
  const Flat pt = flat_of_forms(t.faces, "vertex");
  if (pt.points.size() != 1) throw SchemaError("trihedron faces are not independent");
}

/// Edges f_i n f_j for i < j, labelled with the given stem.
inline std::vector<Flat> trihedron_edges(const Trihedron& t, const std::string& stem) {
  check_trihedron(t);
  std::vector<Flat> e;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      e.push_back(line_of_planes(t.faces[i], t.faces[j], stem + std::to_string(i + 1) + std::to_string(j + 1)));
  return e;
}

/// Seeded random trihedron with small integer data.
inline Trihedron random_trihedron(std::mt19937_64& rng) {
  auto small = [&]() { return Rational(static_cast<long long>(rng() % 11) - 5); };
  for (;;) {
    Trihedron t;
    t.vertex = {small(), small(), small(), small()};
    if (t.vertex == ProjPoint(kP3, Rational(0))) continue;
    for (int k = 0; k < 3; ++k) {
      LinearForm f(kP3);
      for (auto& x : f) x = small();
      Rational v = 0;
      std::size_t piv = kP3;
      for (std::size_t i = 0; i < kP3; ++i) {
        v += f[i] * t.vertex[i];
        if (piv == kP3 && t.vertex[i] != 0) piv = i;
      }
      f[piv] -= v / t.vertex[piv];
      t.faces.push_back(f);
    }
    try {
      check_trihedron(t);
      return t;
    } catch (const SchemaError&) {
    }
  }
}

}  // namespace enriques_lab

#endif  // ENRIQUES_LAB_LINEAR_SYSTEMS_HPP
