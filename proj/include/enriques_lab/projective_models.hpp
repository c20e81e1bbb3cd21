#ifndef ENRIQUES_LAB_PROJECTIVE_MODELS_HPP
#define ENRIQUES_LAB_PROJECTIVE_MODELS_HPP

// The cone V in P^7 over the sextic Del Pezzo surface, the involution t of
// P^7, its fixed points on V, and the quadric map to P^19 whose image spans
// the subspace H13. Ideal membership is only ever asked in the generators' own
// degree, where it is a linear span test.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "enriques.hpp"
#include "lattice.hpp"
#include "model_file.hpp"
#include "polynomial.hpp"

namespace enriques_lab {

struct Ideal {
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;
};

/// x_i -> sign_i * x_{source_i}.
struct InvolutionSpec {
  std::vector<std::size_t> source;
  std::vector<int> sign;

  std::size_t size() const { return source.size(); }
  std::vector<Polynomial> images() const {
    std::vector<Polynomial> img;
    for (std::size_t i = 0; i < size(); ++i)
      img.push_back(Rational(sign[i]) * Polynomial::variable(size(), source[i]));
    return img;
  }
  Matrix<Integer> matrix() const {
    Matrix<Integer> a(size(), size(), Integer(0));
    for (std::size_t i = 0; i < size(); ++i) a(i, source[i]) = sign[i];
    return a;
  }
  bool operator==(const InvolutionSpec&) const = default;

  static InvolutionSpec identity(std::size_t n) {
    InvolutionSpec t;
    for (std::size_t i = 0; i < n; ++i) {
      t.source.push_back(i);
      t.sign.push_back(1);
    }
    return t;
  }
};

inline InvolutionSpec compose(const InvolutionSpec& a, const InvolutionSpec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("involutions on different spaces");
  // (a o b)(x)_i = a(b(x))_i = sign_a_i * b(x)_{src_a_i}
  InvolutionSpec c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    c.source.push_back(b.source[a.source[i]]);
    c.sign.push_back(a.sign[i] * b.sign[a.source[i]]);
  }
  return c;
}

/// +1 or -1 when t o t is that multiple of the identity, 0 otherwise.
inline int square_scalar(const InvolutionSpec& t) {
  const InvolutionSpec s = compose(t, t);
  if (s.size() == 0) return 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.source[i] != i || s.sign[i] != s.sign[0]) return 0;
  return s.sign[0];
}

inline bool is_identity_up_to_sign(const InvolutionSpec& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.source[i] != i || t.sign[i] != t.sign[0]) return false;
  return true;
}

inline InvolutionSpec parse_involution(const std::vector<std::string>& vars, const std::vector<std::string>& images) {
  if (images.size() != vars.size()) throw SchemaError("involution needs one image per variable");
  InvolutionSpec t;
  for (const auto& s : images) {
    const Polynomial p = parse_polynomial(vars, s);
    if (p.size() != 1 || p.degree() != 1) throw SchemaError("involution image '" + s + "' is not a signed variable");
    const auto& [e, c] = *p.terms().begin();
    if (c != 1 && c != -1) throw SchemaError("involution image '" + s + "' is not a signed variable");
    t.source.push_back(static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin()));
    t.sign.push_back(c == 1 ? 1 : -1);
  }
  std::vector<std::size_t> seen = t.source;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw SchemaError("involution is not a permutation");
  return t;
}

inline Polynomial apply(const InvolutionSpec& t, const Polynomial& g) { return g.substitute(t.images()); }

/// Coefficients c with sum c_i gens_i = target, or nullopt.
inline std::optional<std::vector<Rational>> linear_membership(const std::vector<Polynomial>& gens, const Polynomial& target) {
  std::set<Exponents, GrlexGreater> support;
  for (const auto& g : gens)
    for (const auto& [e, c] : g.terms()) support.insert(e);
  for (const auto& [e, c] : target.terms()) support.insert(e);
  const std::vector<Exponents> basis(support.begin(), support.end());
  Matrix<Rational> a(basis.size(), gens.size(), Rational(0));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto v = coefficient_vector(gens[j], basis);
    for (std::size_t i = 0; i < basis.size(); ++i) a(i, j) = v[i];
  }
  const auto b = coefficient_vector(target, basis);
  if (gens.empty()) {
    if (target.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  return solve(a, b);
}

inline bool in_degree_span(const Ideal& ideal, const Polynomial& target) {
  if (target.is_zero()) return true;
  if (!target.is_homogeneous()) throw PreconditionError("membership is tested for homogeneous targets only");
  std::vector<Polynomial> same;
  for (const auto& g : ideal.generators)
    if (g.degree() == target.degree()) same.push_back(g);
  return linear_membership(same, target).has_value();
}

/// Every generator vanishes after substitution. A parametrization with one
/// entry fewer than the ambient variables is read as a cone over its image:
/// the last ambient variable becomes a fresh free parameter.
inline bool parametrization_vanishes(const Ideal& ideal, const std::vector<Polynomial>& param) {
  const std::size_t n = ideal.variables.size();
  std::vector<Polynomial> img = param;
  if (img.size() + 1 == n) {
    const std::size_t m = img.empty() ? 0 : img.front().nvars();
    for (auto& p : img) p = extend_ring(p, m + 1);
    img.push_back(Polynomial::variable(m + 1, m));
  } else if (img.size() != n) {
    throw DimensionMismatch("parametrization has " + std::to_string(param.size()) + " entries for " +
                            std::to_string(n) + " variables");
  }
  for (const auto& g : ideal.generators)
    if (!g.substitute(img).is_zero()) return false;
  return true;
}

inline bool involution_preserves_ideal(const Ideal& ideal, const InvolutionSpec& t) {
  if (t.size() != ideal.variables.size()) throw DimensionMismatch("involution acts on a different space");
  for (const auto& g : ideal.generators)
    if (!in_degree_span(ideal, apply(t, g))) return false;
  return true;
}

/// Integer vector with gcd 1 and first nonzero entry positive.
inline std::vector<Integer> normalize_point(const std::vector<Rational>& x) {
  Integer l = 1;
  for (const auto& v : x) l = lcm(l, denominator(v));
  std::vector<Integer> p;
  for (const auto& v : x) p.push_back(numerator(v * l));
  const Integer g = gcd_of(p);
  if (g == 0) throw PreconditionError("the zero vector is not a projective point");
  Integer s = g;
  for (const auto& v : p)
    if (v != 0) {
      if (v < 0) s = -g;
      break;
    }
  for (auto& v : p) v /= s;
  return p;
}

inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer a = numerator(q), b = denominator(q);
  const Integer ra = floor_sqrt(a), rb = floor_sqrt(b);
  if (ra * ra != a || rb * rb != b) return std::nullopt;
  return Rational(ra, rb);
}

/// Finite solution set of a homogeneous quadric system in k variables, found
/// through relations z_i^2 = c_i z_r^2 in the span of the generators. Throws
/// when such relations do not pin the solutions down.
inline std::vector<std::vector<Rational>> solve_by_square_relations(const std::vector<Polynomial>& gens, std::size_t k) {
  auto all_vanish = [&](const std::vector<Rational>& z) {
    for (const auto& g : gens)
      if (g.evaluate(z) != 0) return false;
    return true;
  };
  std::vector<std::vector<Rational>> out;
  if (k == 1) {
    if (all_vanish({Rational(1)})) out.push_back({Rational(1)});
    return out;
  }
  auto sq = [&](std::size_t i) {
    Exponents e(k, 0);
    e[i] = 2;
    return Polynomial::monomial(e);
  };
  bool all_forced_zero = true;
  for (std::size_t r = 0; r < k; ++r) {
    if (linear_membership(gens, sq(r))) continue;
    all_forced_zero = false;
    std::vector<Rational> root(k, Rational(0));
    root[r] = 1;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (i == r) continue;
      auto ext = gens;
      ext.push_back(sq(r));
      const auto c = linear_membership(ext, sq(i));
      if (!c) {
        ok = false;
        break;
      }
      const auto s = rational_sqrt(c->back());
      if (!s) throw PreconditionError("fixed points are not rational");
      root[i] = *s;
    }
    if (!ok) continue;
    // z_r = 1, z_i = +-root_i.
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < k; ++i)
      if (i != r && root[i] != 0) free.push_back(i);
    for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
      std::vector<Rational> z = root;
      for (std::size_t b = 0; b < free.size(); ++b)
        if (mask >> b & 1) z[free[b]] = -z[free[b]];
      if (all_vanish(z)) out.push_back(z);
    }
    return out;
  }
  if (all_forced_zero) return out;
  throw PreconditionError("fixed locus is not finite or not cut out by square relations");
}

using IntPoint = std::vector<Integer>;

/// Fixed points of t on the zero set of the ideal. The fixed locus of a
/// signed-permutation involution is the union of its two eigenspaces; on each
/// eigenspace the restricted generators are solved exactly.
inline std::vector<IntPoint> fixed_points_on_cone(const Ideal& ideal, const InvolutionSpec& t) {
  const std::size_t n = ideal.variables.size();
  if (t.size() != n) throw DimensionMismatch("involution acts on a different space");
  const int sq = square_scalar(t);
  if (sq == 0) throw PreconditionError("t is not an involution");
  if (is_identity_up_to_sign(t)) throw PreconditionError("fixed locus is not finite: t acts as the identity");
  if (sq == -1) throw PreconditionError("t squares to -1; no rational fixed points");
  std::set<IntPoint> found;
  const Matrix<Integer> a = t.matrix();
  for (int eig : {1, -1}) {
    Matrix<Integer> m = a;
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= eig;
    const auto basis = kernel_basis(m);
    if (basis.empty()) continue;
    const std::size_t k = basis.size();
    std::vector<Polynomial> img(n, Polynomial(k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) img[i] += basis[j][i] * Polynomial::variable(k, j);
    std::vector<Polynomial> restricted;
    for (const auto& g : ideal.generators) {
      Polynomial r = g.substitute(img);
      if (!r.is_zero()) restricted.push_back(std::move(r));
    }
    for (const auto& z : solve_by_square_relations(restricted, k)) {
      std::vector<Rational> x(n, Rational(0));
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) x[i] += z[j] * basis[j][i];
      found.insert(normalize_point(x));
    }
  }
  return {found.begin(), found.end()};
}

/// Fixed points of [u0:u1:u2] -> [u1u2:u0u2:u0u1]. A fixed point has no zero
/// coordinate (otherwise the image is undefined or has a different support),
/// and then u0u1u2 = mu u_i^2 for all i, so u0^2 = u1^2 = u2^2.
inline std::vector<IntPoint> cremona_fixed_points() {
  std::vector<IntPoint> out;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      const std::vector<Integer> u{1, s1, s2};
      const std::vector<Integer> c{u[1] * u[2], u[0] * u[2], u[0] * u[1]};
      // c = mu u
      const Integer mu = c[0] / u[0];
      if (c[1] != mu * u[1] || c[2] != mu * u[2]) throw Error("sign analysis produced a non-fixed point");
      out.push_back(u);
    }
  return out;
}

struct Pef13Data {
  Ideal ideal;                         // generators of V in P^7
  std::vector<std::string> param_variables;
  std::vector<Polynomial> parametrization;  // lambda: P^2 --> P^6
  std::vector<Polynomial> plane_involution; // Cremona map on P^2
  InvolutionSpec t;
  std::map<std::string, IntPoint> listed_fixed_points;
  std::vector<Polynomial> zmap;        // Z0..Z19
  std::vector<std::pair<std::string, std::string>> h13;  // Z_a = expression in Z
  std::vector<long long> del_pezzo_gram_diagonal;
  std::vector<long long> anticanonical;
  std::vector<std::vector<long long>> elliptic_pencils;  // l - e_i
  long long double_cover_factor = 2;
  std::string open_question;
};

inline Pef13Data parse_pef13_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text, nullptr, true, true);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw SchemaError(std::string("pef13 data is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("schema", std::string()) != "enriques-lab/pef13/1") throw SchemaError("unsupported or missing schema tag");
    Pef13Data d;
    d.ideal.variables = j.at("variables").get<std::vector<std::string>>();
    for (const auto& s : j.at("ideal")) d.ideal.generators.push_back(parse_polynomial(d.ideal.variables, s.get<std::string>()));
    const auto& p = j.at("parametrization");
    d.param_variables = p.at("variables").get<std::vector<std::string>>();
    for (const auto& s : p.at("images")) d.parametrization.push_back(parse_polynomial(d.param_variables, s.get<std::string>()));
    for (const auto& s : j.at("plane_involution"))
      d.plane_involution.push_back(parse_polynomial(d.param_variables, s.get<std::string>()));
    d.t = parse_involution(d.ideal.variables, j.at("involution").get<std::vector<std::string>>());
    for (auto it = j.at("fixed_points").begin(); it != j.at("fixed_points").end(); ++it) {
      std::vector<Rational> x;
      for (const auto& v : it.value()) x.push_back(Rational(v.get<long long>()));
      if (x.size() != d.ideal.variables.size()) throw SchemaError("fixed point " + it.key() + " has wrong arity");
      d.listed_fixed_points[it.key()] = normalize_point(x);
    }
    for (const auto& s : j.at("zmap")) d.zmap.push_back(parse_polynomial(d.ideal.variables, s.get<std::string>()));
    for (const auto& r : j.at("h13")) d.h13.emplace_back(r.at(0).get<std::string>(), r.at(1).get<std::string>());
    const auto& dp = j.at("del_pezzo");
    d.del_pezzo_gram_diagonal = dp.at("gram_diagonal").get<std::vector<long long>>();
    d.anticanonical = dp.at("anticanonical").get<std::vector<long long>>();
    d.elliptic_pencils = dp.at("elliptic_pencils").get<std::vector<std::vector<long long>>>();
    d.double_cover_factor = j.value("double_cover_factor", 2LL);
    d.open_question = j.value("open_question", std::string());
    for (const auto& g : d.ideal.generators)
      if (!g.is_homogeneous()) throw SchemaError("ideal generators must be homogeneous");
    for (const auto& z : d.zmap)
      if (!z.is_homogeneous() || z.degree() != 2) throw SchemaError("every Z must be a quadric");
    return d;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw SchemaError(std::string("pef13 data: ") + e.what());
  }
}

inline Pef13Data load_pef13(const std::string& path) { return parse_pef13_json(read_text_file(path)); }

/// lambda(c(u)) == u0 u1 u2 * t'(lambda(u)), t' the restriction of t to x0..x6.
inline bool cremona_intertwines(const Pef13Data& d) {
  const std::size_t n = d.parametrization.size();
  if (n + 1 != d.t.size()) throw DimensionMismatch("parametrization does not match the cone");
  const std::size_t m = d.parametrization.front().nvars();
  Polynomial prod = Polynomial::constant(m, 1);
  for (std::size_t i = 0; i < m; ++i) prod = prod * Polynomial::variable(m, i);
  for (std::size_t i = 0; i < n; ++i) {
    if (d.t.source[i] >= n) return false;
    const Polynomial lhs = d.parametrization[i].substitute(d.plane_involution);
    const Polynomial rhs = Rational(d.t.sign[i]) * prod * d.parametrization[d.t.source[i]];
    if (lhs != rhs) return false;
  }
  return true;
}

/// Fixed points from the plane: lambda of the Cremona fixed points, on the
/// section y = 0, plus the vertex. On the ruling through lambda(u) the
/// involution acts by [lambda(u) : w] -> [mu lambda(u) : -w], which fixes only
/// w = 0 when mu = 1.
inline std::vector<IntPoint> fixed_points_via_plane(const Pef13Data& d) {
  if (!cremona_intertwines(d)) throw PreconditionError("t does not lift the Cremona involution");
  std::set<IntPoint> out;
  const std::size_t n = d.parametrization.size();
  for (const auto& u : cremona_fixed_points()) {
    std::vector<Rational> uq(u.begin(), u.end());
    std::vector<Rational> x;
    for (const auto& p : d.parametrization) x.push_back(p.evaluate(uq));
    std::vector<Rational> tx(n);
    for (std::size_t i = 0; i < n; ++i) tx[i] = Rational(d.t.sign[i]) * x[d.t.source[i]];
    if (tx != x) throw PreconditionError("a whole ruling of the cone is fixed");
    x.push_back(Rational(0));
    out.insert(normalize_point(x));
  }
  std::vector<Rational> vertex(n + 1, Rational(0));
  vertex.back() = 1;
  out.insert(normalize_point(vertex));
  return {out.begin(), out.end()};
}

inline std::vector<std::string> z_names(std::size_t n) { return indexed_names("Z", n); }

/// The polynomial Z_lhs - rhs(Z) in the x variables.
inline Polynomial h13_difference(const Pef13Data& d, const std::pair<std::string, std::string>& rel) {
  const auto names = z_names(d.zmap.size());
  const Polynomial lhs = parse_polynomial(names, rel.first);
  const Polynomial rhs = parse_polynomial(names, rel.second);
  return (lhs - rhs).substitute(d.zmap);
}

struct MembershipCertificate {
  Polynomial target;
  std::vector<Rational> coefficients;  // one per ideal generator
  bool integral = false;
  bool rechecked = false;              // sum c_i g_i == target, recomputed
  std::size_t terms() const {
    return static_cast<std::size_t>(std::count_if(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c != 0; }));
  }
};

inline std::optional<MembershipCertificate> membership_certificate(const Ideal& ideal, const Polynomial& target) {
  const auto c = linear_membership(ideal.generators, target);
  if (!c) return std::nullopt;
  MembershipCertificate m{target, *c};
  m.integral = std::all_of(c->begin(), c->end(), [](const Rational& q) { return denominator(q) == 1; });
  Polynomial s(target.nvars());
  for (std::size_t i = 0; i < c->size(); ++i) s += (*c)[i] * ideal.generators[i];
  m.rechecked = s == target;
  return m;
}

/// All relations lie in the integer span of the generators.
inline bool h13_relations_hold(const Pef13Data& d) {
  for (const auto& rel : d.h13) {
    const auto cert = membership_certificate(d.ideal, h13_difference(d, rel));
    if (!cert || !cert->integral || !cert->rechecked) return false;
  }
  return true;
}

inline bool zmap_invariance(const std::vector<Polynomial>& zmap, const InvolutionSpec& t) {
  for (const auto& z : zmap)
    if (apply(t, z) != z) return false;
  return true;
}

/// 2p - 2 = S^3 = (1/2)(2M)^3 = 4 deg V.
inline long long genus_from_cone(long long deg_base) {
  if (deg_base < 1) throw PreconditionError("degree of the base must be positive");
  return (4 * deg_base + 2) / 2;
}

inline long long del_pezzo_degree(const Pef13Data& d) {
  const Lattice l = Lattice::diagonal(d.del_pezzo_gram_diagonal, "Del Pezzo Picard lattice");
  std::vector<Integer> k(d.anticanonical.begin(), d.anticanonical.end());
  return static_cast<long long>(l.pairing(k, k));
}

struct PullbackReport {
  long long d_square = 0;                 // D = sum of the pulled-back pencils
  std::vector<std::vector<long long>> pencil_pairings;  // Ebar_i . Ebar_j
  long long h_square = 0;                 // (2D)^2
  long long e1_dot_d = 0;                 // Ebar_1 . D
  long long lower_bound = 0;              // if Ebar_1 were none of the Etilde_i
};

/// Pullback pairings on the double cover are the base pairings times the degree.
inline PullbackReport pullback_decomposition_check(const Pef13Data& d) {
  const Lattice base = Lattice::diagonal(d.del_pezzo_gram_diagonal, "Del Pezzo Picard lattice");
  const Integer f = d.double_cover_factor;
  std::vector<std::vector<Integer>> e;
  for (const auto& v : d.elliptic_pencils) e.emplace_back(v.begin(), v.end());
  std::vector<Integer> dsum(base.rank(), Integer(0));
  for (const auto& v : e)
    for (std::size_t i = 0; i < v.size(); ++i) dsum[i] += v[i];
  PullbackReport r;
  r.d_square = static_cast<long long>(f * base.pairing(dsum, dsum));
  for (const auto& a : e) {
    std::vector<long long> row;
    for (const auto& b : e) row.push_back(static_cast<long long>(f * base.pairing(a, b)));
    r.pencil_pairings.push_back(row);
  }
  r.h_square = 4 * r.d_square;
  r.e1_dot_d = static_cast<long long>(f * base.pairing(e.at(0), dsum));
  r.lower_bound = k3_degree_bound(std::vector<long long>(e.size(), 1), r.pencil_pairings.at(0).at(1));
  return r;
}

}  // namespace enriques_lab

#endif  // ENRIQUES_LAB_PROJECTIVE_MODELS_HPP
