#ifndef ENRIQUES_LAB_BLOWUP_HPP
#define ENRIQUES_LAB_BLOWUP_HPP

// Intersection numbers on iterated blow-ups of P^3 at points and along smooth
// curves. Divisor classes are integer vectors over (H, E_1, ..., E_n) where H
// is the pullback of a plane and E_k the total transform of the k-th
// exceptional divisor.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace enriques_lab {

using DivClass = std::vector<Integer>;

enum class CenterKind { Point, Curve };

struct Center {
  std::string name;
  CenterKind kind = CenterKind::Point;
  int genus = 0;
  // For curves: G.C for every generator G present when the curve is blown up
  // (H first, then earlier exceptionals in order). Empty for points.
  std::vector<Integer> incidence;

  static Center point(std::string name) { return {std::move(name), CenterKind::Point, 0, {}}; }
  static Center curve(std::string name, int genus, std::vector<Integer> incidence) {
    return {std::move(name), CenterKind::Curve, genus, std::move(incidence)};
  }
};

class BlowupModel {
 public:
  /// P^3 itself: one generator H, canonical class -4H.
  static BlowupModel projective_space() {
    BlowupModel m;
    m.names_ = {"H"};
    m.canonical_ = {Integer(-4)};
    return m;
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::vector<Center>& centers() const { return centers_; }
  const DivClass& canonical() const { return canonical_; }
  /// E_k^3 of the exceptional divisor of center k at the moment it was created.
  const Integer& exceptional_cube(std::size_t k) const { return cubes_.at(k); }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw InputError("unknown generator: " + name);
  }

  DivClass zero() const { return DivClass(size(), Integer(0)); }
  DivClass generator(std::size_t i) const {
    DivClass d = zero();
    d.at(i) = 1;
    return d;
  }

  /// Appends one blow-up. Point: K gains 2E, E^3 = 1. Curve of genus g:
  /// K gains E, E^3 = 2 - 2g + K.C with K the canonical class before.
  BlowupModel push(const Center& c) const {
    for (const auto& n : names_)
      if (n == c.name) throw SchemaError("duplicate generator name: " + c.name);
    BlowupModel m = *this;
    if (c.kind == CenterKind::Point) {
      if (!c.incidence.empty()) throw SchemaError("point center " + c.name + " carries incidence data");
      m.cubes_.push_back(1);
      m.canonical_.push_back(2);
    } else {
      if (c.incidence.size() != size())
        throw SchemaError("curve " + c.name + " needs incidence against all " + std::to_string(size()) + " generators");
      if (c.genus < 0) throw SchemaError("negative genus for " + c.name);
      Integer kc = 0;
      for (std::size_t j = 0; j < size(); ++j) kc += canonical_[j] * c.incidence[j];
      m.cubes_.push_back(2 - 2 * c.genus + kc);
      m.canonical_.push_back(1);
    }
    m.names_.push_back(c.name);
    m.centers_.push_back(c);
    return m;
  }

  /// Trilinear intersection number. Expanding in the generator basis, a
  /// monomial is decided by its newest exceptional E_k (generator k+1):
  /// E_k * A * B = 0, E_k^2 * A = -(A.C_k), E_k^3 = cube, and monomials
  /// without exceptionals give H^3 = 1.
  Integer triple(const DivClass& a, const DivClass& b, const DivClass& c) const {
    check(a);
    check(b);
    check(c);
    Integer total = a[0] * b[0] * c[0];
    for (std::size_t k = 0; k < centers_.size(); ++k) {
      const std::size_t g = k + 1;
      if (a[g] == 0 && b[g] == 0 && c[g] == 0) continue;
      total += cubes_[k] * a[g] * b[g] * c[g];
      const Center& ctr = centers_[k];
      if (ctr.kind != CenterKind::Curve) continue;
      const Integer ab = a[g] * b[g], ac = a[g] * c[g], bc = b[g] * c[g];
      if (ab == 0 && ac == 0 && bc == 0) continue;
      for (std::size_t j = 0; j < g; ++j) {
        const Integer& inc = ctr.incidence[j];
        if (inc == 0) continue;
        total -= inc * (ab * c[j] + ac * b[j] + bc * a[j]);
      }
    }
    return total;
  }

  void check(const DivClass& d) const {
    if (d.size() != size())
      throw DimensionMismatch("class has " + std::to_string(d.size()) + " coefficients, model has " +
                              std::to_string(size()) + " generators");
  }

 private:
  std::vector<std::string> names_;
  std::vector<Center> centers_;
  std::vector<Integer> cubes_;
  DivClass canonical_;
};

inline BlowupModel push_blowup(const BlowupModel& m, const Center& c) { return m.push(c); }

inline Integer triple_product(const BlowupModel& m, const DivClass& a, const DivClass& b, const DivClass& c) {
  return m.triple(a, b, c);
}

/// True when the curve class S.E is numerically zero: S.E.G = 0 for all G.
inline bool check_zero_restriction(const BlowupModel& m, const DivClass& s, const DivClass& e) {
  for (std::size_t g = 0; g < m.size(); ++g)
    if (m.triple(s, e, m.generator(g)) != 0) return false;
  return true;
}

/// D in span_Z(trivial) + n * Z^generators.
inline bool divisible_mod_trivial(const BlowupModel& m, const DivClass& d, const std::vector<DivClass>& trivial,
                                  const Integer& n) {
  m.check(d);
  for (const auto& t : trivial) m.check(t);
  return in_span_mod(trivial, d, n);
}

inline DivClass operator+(DivClass a, const DivClass& b) {
  if (a.size() != b.size()) throw DimensionMismatch("class length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline DivClass operator-(DivClass a, const DivClass& b) {
  if (a.size() != b.size()) throw DimensionMismatch("class length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline DivClass operator*(const Integer& k, DivClass a) {
  for (auto& x : a) x *= k;
  return a;
}

/// "6H - 3E0 + ..." with zero coefficients dropped.
inline std::string format_class(const BlowupModel& m, const DivClass& d) {
  m.check(d);
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += d[i] > 0 ? " + " : " - ";
    else if (d[i] < 0) out += "-";
    const Integer a = d[i] < 0 ? Integer(-d[i]) : d[i];
    if (a != 1) out += a.str();
    out += m.generators()[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace enriques_lab

#endif  // ENRIQUES_LAB_BLOWUP_HPP
