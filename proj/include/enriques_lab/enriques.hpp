#ifndef ENRIQUES_LAB_ENRIQUES_HPP
#define ENRIQUES_LAB_ENRIQUES_HPP

#include <array>
#include <cctype>
#include <compare>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lattice.hpp"
#include "numeric.hpp"

namespace enriques_lab {

// ---------------------------------------------------------------------------
// Numerical classes in the isotropic basis E1..E10 (E_i^2 = 0, E_i.E_j = 1).
// Coordinates have denominator dividing 3; a class is stored as the integer
// vector t = 3c. E12 denotes (E1+...+E10)/3 - E1 - E2.

class NumClass {
 public:
  static constexpr std::size_t kRank = 10;
  using Thirds = std::array<Integer, kRank>;

  NumClass() { t_.fill(0); }

  static NumClass from_thirds(const Thirds& t) {
    for (std::size_t i = 0; i + 1 < kRank; ++i)
      if (mod(t[i] - t[kRank - 1], 3) != 0)
        throw InvalidClass("coordinates do not lie in the unimodular overlattice");
    NumClass c;
    c.t_ = t;
    return c;
  }

  static NumClass from_coords(const std::array<Rational, kRank>& c) {
    Thirds t;
    for (std::size_t i = 0; i < kRank; ++i) {
      const Rational x = c[i] * 3;
      if (denominator(x) != 1) throw InvalidClass("coordinate denominator does not divide 3");
      t[i] = numerator(x);
    }
    return from_thirds(t);
  }

  /// E_i for i in 1..10.
  static NumClass E(int i) {
    if (i < 1 || i > 10) throw InvalidClass("isotropic generator index out of range");
    NumClass c;
    c.t_[i - 1] = 3;
    return c;
  }

  static NumClass E12() {
    NumClass c;
    c.t_.fill(1);
    c.t_[0] = c.t_[1] = -2;
    return c;
  }

  /// Class with integral-basis coordinates (n1..n9, b): sum n_i E_i + b E12.
  static NumClass from_integral(const std::array<Integer, kRank>& n) {
    Thirds t;
    const Integer& b = n[9];
    for (std::size_t i = 0; i < 9; ++i) t[i] = 3 * n[i] + (i < 2 ? Integer(-2 * b) : b);
    t[9] = b;
    return from_thirds(t);
  }

  std::array<Integer, kRank> integral_coords() const {
    std::array<Integer, kRank> n;
    const Integer& b = t_[9];
    for (std::size_t i = 0; i < 9; ++i) n[i] = (t_[i] - (i < 2 ? Integer(-2 * b) : b)) / 3;
    n[9] = b;
    return n;
  }

  const Thirds& thirds() const { return t_; }
  Rational coord(std::size_t i) const { return Rational(t_.at(i), 3); }

  bool is_zero() const {
    return std::all_of(t_.begin(), t_.end(), [](const Integer& x) { return x == 0; });
  }

  NumClass& operator+=(const NumClass& o) {
    for (std::size_t i = 0; i < kRank; ++i) t_[i] += o.t_[i];
    return *this;
  }
  NumClass& operator-=(const NumClass& o) {
    for (std::size_t i = 0; i < kRank; ++i) t_[i] -= o.t_[i];
    return *this;
  }
  NumClass& operator*=(const Integer& k) {
    for (auto& x : t_) x *= k;
    return *this;
  }
  friend NumClass operator+(NumClass a, const NumClass& b) { return a += b; }
  friend NumClass operator-(NumClass a, const NumClass& b) { return a -= b; }
  friend NumClass operator-(NumClass a) { return a *= Integer(-1); }
  friend NumClass operator*(const Integer& k, NumClass a) { return a *= k; }
  friend NumClass operator*(long long k, NumClass a) { return a *= Integer(k); }

  bool operator==(const NumClass& o) const { return t_ == o.t_; }
  bool operator<(const NumClass& o) const { return t_ < o.t_; }

 private:
  Thirds t_;
};

inline Integer pairing(const NumClass& u, const NumClass& v) {
  Integer su = 0, sv = 0, diag = 0;
  const auto& a = u.thirds();
  const auto& b = v.thirds();
  for (std::size_t i = 0; i < NumClass::kRank; ++i) {
    su += a[i];
    sv += b[i];
    diag += a[i] * b[i];
  }
  const Integer num = su * sv - diag;
  if (num % 9 != 0) throw InvalidClass("pairing is not integral");
  return num / 9;
}

inline Integer square(const NumClass& u) { return pairing(u, u); }

/// Gram matrix of E1..E10: zero diagonal, ones elsewhere.
inline Lattice e_basis_lattice() {
  Matrix<Integer> g(10, 10, Integer(1));
  for (std::size_t i = 0; i < 10; ++i) g(i, i) = 0;
  return Lattice(std::move(g), "E10 isotropic basis");
}

inline std::vector<NumClass> integral_basis() {
  std::vector<NumClass> b;
  for (int i = 1; i <= 9; ++i) b.push_back(NumClass::E(i));
  b.push_back(NumClass::E12());
  return b;
}

/// Gram matrix of the integral basis {E1..E9, E12}.
inline Lattice integral_basis_lattice() {
  return Lattice(gram_of(integral_basis(), [](const NumClass& a, const NumClass& b) { return pairing(a, b); }),
                 "E10 integral basis");
}

inline bool is_primitive(const NumClass& z) {
  if (z.is_zero()) throw PreconditionError("primitivity of the zero class");
  const auto n = z.integral_coords();
  return gcd_of(std::span<const Integer>(n)) == 1;
}

// ---------------------------------------------------------------------------
// Picard classes: numerical part plus the 2-torsion bit of K_S.

struct PicClass {
  NumClass num;
  int eps = 0;

  PicClass() = default;
  PicClass(NumClass n, int e = 0) : num(std::move(n)), eps(e & 1) {}

  friend PicClass operator+(const PicClass& a, const PicClass& b) { return {a.num + b.num, a.eps ^ b.eps}; }
  friend PicClass operator-(const PicClass& a, const PicClass& b) { return {a.num - b.num, a.eps ^ b.eps}; }
  friend PicClass operator*(long long k, const PicClass& a) {
    return {k * a.num, static_cast<int>(((k % 2) + 2) % 2) & a.eps};
  }
  bool operator==(const PicClass&) const = default;
};

inline Integer pairing(const PicClass& u, const PicClass& v) { return pairing(u.num, v.num); }

inline Integer genus_of(const PicClass& h) {
  const Integer h2 = square(h.num);
  if (h2 < 0) throw PreconditionError("genus of a class with negative square");
  if (h2 % 2 != 0) throw InvalidClass("odd square in an even lattice");
  return h2 / 2 + 1;
}

// ---------------------------------------------------------------------------
// Simple isotropic decompositions a0 E12 + sum a_i E_i + eps K.

struct SidCoefficients {
  int a0 = 0;
  std::array<int, 10> a{};
  int eps = 0;

  PicClass to_pic() const {
    NumClass n = Integer(a0) * NumClass::E12();
    for (int i = 0; i < 10; ++i)
      if (a[i] != 0) n += Integer(a[i]) * NumClass::E(i + 1);
    return {n, eps};
  }

  bool nonnegative() const {
    return a0 >= 0 && std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
  }

  /// Either a0 = 0 and the number of positive a_i is not 9, or a10 = 0.
  bool normalized() const {
    if (!nonnegative()) return false;
    const auto positive = std::count_if(a.begin(), a.end(), [](int x) { return x > 0; });
    return (a0 == 0 && positive != 9) || a[9] == 0;
  }

  /// Without E12 all ten E_i are interchangeable; with it only the swap of
  /// E1, E2 and permutations of E3..E10 preserve the pairing table. When
  /// a1 = a2 = 0, E12 meets every E_i with a_i > 0 once, so (E12, E3..E10)
  /// is itself an isotropic 9-sequence and E12 is relabeled as an ordinary E_i.
  SidCoefficients canonical() const {
    SidCoefficients c = *this;
    if (c.a0 > 0 && c.a[0] == 0 && c.a[1] == 0 && c.a[9] == 0) {
      c.a[9] = c.a0;
      c.a0 = 0;
    }
    if (c.a0 == 0) {
      std::sort(c.a.begin(), c.a.end(), std::greater<>());
    } else {
      std::sort(c.a.begin(), c.a.begin() + 2, std::greater<>());
      std::sort(c.a.begin() + 2, c.a.end(), std::greater<>());
    }
    return c;
  }

  /// H^2 / 2 computed straight from the pairing table.
  long long half_square() const {
    long long s = 0, pairs = 0;
    for (int i = 0; i < 10; ++i) {
      pairs += static_cast<long long>(a[i]) * s;
      s += a[i];
    }
    return pairs + static_cast<long long>(a0) * (s + a[0] + a[1]);
  }

  std::string to_string() const {
    std::string out;
    auto term = [&](int coeff, const std::string& name) {
      if (coeff == 0) return;
      if (!out.empty()) out += coeff > 0 ? "+" : "-";
      else if (coeff < 0) out += "-";
      const int m = coeff < 0 ? -coeff : coeff;
      if (m != 1) out += std::to_string(m);
      out += name;
    };
    for (int i = 0; i < 10; ++i) term(a[i], "E" + std::to_string(i + 1));
    term(a0, "E12");
    if (eps) out += out.empty() ? "K" : "+K";
    return out.empty() ? "0" : out;
  }

  auto operator<=>(const SidCoefficients&) const = default;
};

// ---------------------------------------------------------------------------
// Isotropic vectors of fixed degree against H.
//
// Any z with z.H = m is z0 + sum y_j n_j with z0 a fixed lift and n_j a basis
// of the integral orthogonal complement of H, which is negative definite when
// H^2 > 0. Then z^2 = 0 becomes (y - c)^T G (y - c) = m^2 / H^2 with
// G = -(n_j . n_k); the solutions are enumerated exactly level by level.

class IsotropicSearch {
 public:
  explicit IsotropicSearch(const NumClass& h) : h_(h) {
    h2_ = square(h_);
    if (h2_ <= 0) throw PreconditionError("isotropic search needs H^2 > 0");
    const auto basis = integral_basis();
    std::vector<Integer> a;
    for (const auto& b : basis) a.push_back(pairing(h_, b));
    ColumnReduction red = reduce_row(a);
    gh_ = red.gcd;
    auto column = [&](std::size_t col) {
      std::array<Integer, 10> n;
      for (std::size_t i = 0; i < 10; ++i) n[i] = red.transform(i, col);
      return NumClass::from_integral(n);
    };
    lift_ = column(0);
    std::vector<NumClass> kernel;
    for (std::size_t j = 1; j < 10; ++j) kernel.push_back(column(j));

    const auto neg = [](const NumClass& x, const NumClass& y) { return Integer(-pairing(x, y)); };
    Matrix<Integer> t = lll_reduce(gram_of(kernel, neg));
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      NumClass v;
      for (std::size_t j = 0; j < kernel.size(); ++j)
        if (t(i, j) != 0) v += t(i, j) * kernel[j];
      kernel_.push_back(v);
    }
    gram_ = gram_of(kernel_, neg);
    gs_ = gram_schmidt(gram_);

    // Center for the unit lift; it scales linearly with m / gcd.
    Matrix<Rational> gq(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j) gq(i, j) = Rational(gram_(i, j));
    std::vector<Rational> b(9);
    for (std::size_t j = 0; j < 9; ++j) b[j] = Rational(pairing(lift_, kernel_[j]));
    auto c = solve(gq, b);
    if (!c) throw Error("orthogonal complement Gram matrix is singular");
    unit_center_ = *c;
  }

  const Integer& h_square() const { return h2_; }
  /// gcd of H . x over the lattice; only multiples of it occur as degrees.
  const Integer& degree_gcd() const { return gh_; }
  const std::vector<NumClass>& complement_basis() const { return kernel_; }

  /// Every z with z^2 = 0 and z.H = m (primitive or not), in a fixed order.
  std::vector<NumClass> fiber(const Integer& m) const {
    std::vector<NumClass> out;
    enumerate(m, [&](const NumClass& z) {
      out.push_back(z);
      return false;
    });
    return out;
  }

  /// First primitive z in the fiber of degree m, if any.
  std::optional<NumClass> primitive_in_fiber(const Integer& m) const {
    std::optional<NumClass> found;
    enumerate(m, [&](const NumClass& z) {
      if (!is_primitive(z)) return false;
      found = z;
      return true;
    });
    return found;
  }

 private:
  // Calls visit(z) for each solution; stops when visit returns true.
  template <class Visit>
  void enumerate(const Integer& m, Visit&& visit) const {
    if (m == 0 || m % gh_ != 0) return;
    const Integer k = m / gh_;
    const NumClass z0 = k * lift_;
    const std::size_t n = kernel_.size();
    std::vector<Rational> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = unit_center_[j] * Rational(k);

    Rational radius = Rational(square(z0));
    for (std::size_t j = 0; j < n; ++j) radius += Rational(pairing(z0, kernel_[j])) * c[j];
    if (radius != Rational(m * m, h2_)) throw Error("fiber radius disagrees with m^2 / H^2");

    std::vector<Integer> y(n);
    std::vector<Rational> x(n);  // y - c
    bool stop = false;

    std::function<void(std::size_t, const Rational&)> level = [&](std::size_t i, const Rational& r) {
      Rational shift = 0;
      for (std::size_t j = i + 1; j < n; ++j) shift += gs_.mu(j, i) * x[j];
      const Rational center = c[i] - shift;
      const Rational& d = gs_.d[i];
      const Integer s = floor_sqrt(r / d);
      Integer lo = ceil(center - Rational(s + 1));
      Integer hi = floor(center + Rational(s + 1));
      auto fits = [&](const Integer& v) {
        const Rational e = Rational(v) - center;
        return d * e * e <= r;
      };
      while (lo <= hi && !fits(lo)) ++lo;
      while (hi >= lo && !fits(hi)) --hi;
      for (Integer v = lo; v <= hi && !stop; ++v) {
        const Rational e = Rational(v) - center;
        const Rational rest = r - d * e * e;
        y[i] = v;
        x[i] = Rational(v) - c[i];
        if (i > 0) {
          level(i - 1, rest);
        } else if (rest == 0) {
          NumClass z = z0;
          for (std::size_t j = 0; j < n; ++j)
            if (y[j] != 0) z += y[j] * kernel_[j];
          if (square(z) != 0 || pairing(z, h_) != m) throw Error("fiber vector fails its defining equations");
          stop = visit(z);
        }
      }
    };
    level(n - 1, radius);
  }

  NumClass h_;
  Integer h2_;
  Integer gh_;
  NumClass lift_;
  std::vector<NumClass> kernel_;
  Matrix<Integer> gram_;
  GramSchmidt gs_;
  std::vector<Rational> unit_center_;
};

struct PhiResult {
  Integer phi;
  NumClass witness;  // primitive isotropic z with z.H = phi
};

/// min { z.H : z isotropic, primitive, z.H > 0 }, with a witness. The search
/// runs m = 1, 2, ... up to the smallest nonzero |E_i.H|, which is always
/// attained by +-E_i.
inline PhiResult phi_with_witness(const NumClass& h) {
  IsotropicSearch search(h);
  Integer bound = -1;
  for (int i = 1; i <= 10; ++i) {
    Integer d = pairing(NumClass::E(i), h);
    if (d < 0) d = -d;
    if (d != 0 && (bound < 0 || d < bound)) bound = d;
  }
  for (Integer m = search.degree_gcd(); m <= bound; m += search.degree_gcd()) {
    if (auto z = search.primitive_in_fiber(m)) {
      if (m * m > search.h_square()) throw Error("phi^2 exceeds H^2");
      return {m, *z};
    }
  }
  throw Error("no primitive isotropic class up to the E_i bound");
}

inline Integer phi(const NumClass& h) { return phi_with_witness(h).phi; }
inline Integer phi(const PicClass& h) { return phi(h.num); }

inline bool numerically_divisible(const NumClass& c, const Integer& n);

// ---------------------------------------------------------------------------
// SID enumeration for fixed genus and phi.

struct SidWithPhi {
  SidCoefficients sid;
  int phi;
};

/// Every canonical normalized tuple with H^2 = 2g - 2, together with its phi;
/// even E-parts come twice, with eps = 0 and eps = 1.
/// Results are cached per genus.
inline const std::vector<SidWithPhi>& sids_of_genus(int g) {
  static std::mutex mutex;
  static std::map<int, std::vector<SidWithPhi>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(g); it != cache.end()) return it->second;
  }
  std::vector<SidWithPhi> out;
  const long long target = g - 1;
  const int cap = 2 * g - 2;
  std::set<SidCoefficients> seen;
  SidCoefficients cur;

  // Coefficients are filled in the order a0, a1, a2, a3..a10; within each
  // block entries are non-increasing. `value` is the partial H^2/2.
  std::function<void(int, long long, long long)> fill = [&](int idx, long long sum, long long value) {
    if (value > target) return;
    if (idx == 10) {
      if (value != target || !cur.normalized()) return;
      SidCoefficients c = cur.canonical();
      if (!seen.insert(c).second) return;
      const PicClass h = c.to_pic();
      const int ph = static_cast<int>(phi(h));
      out.push_back({c, ph});
      // eps = 1 needs H + K_S 2-divisible, i.e. an even E-part
      if (numerically_divisible(h.num, 2)) {
        c.eps = 1;
        out.push_back({c, ph});
      }
      return;
    }
    int upper = cap;
    if (idx != 0 && idx != 2) upper = std::min(upper, cur.a[idx - 1]);
    if (idx == 2 && cur.a0 == 0) upper = std::min(upper, cur.a[1]);
    const long long weight = sum + static_cast<long long>(cur.a0) * (idx < 2 ? 2 : 1);
    for (int v = 0; v <= upper; ++v) {
      const long long next = value + v * weight;
      if (next > target) break;
      cur.a[idx] = v;
      fill(idx + 1, sum + v, next);
    }
    cur.a[idx] = 0;
  };
  if (g >= 2) {
    for (int a0 = 0; a0 <= cap; ++a0) {
      cur = SidCoefficients{};
      cur.a0 = a0;
      fill(0, 0, 0);
    }
  }
  std::sort(out.begin(), out.end(), [](const SidWithPhi& x, const SidWithPhi& y) { return x.sid < y.sid; });
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(g, std::move(out)).first->second;
}

inline std::vector<SidCoefficients> enumerate_sids(int g, int target_phi) {
  std::vector<SidCoefficients> out;
  if (g < 2) throw PreconditionError("enumerate_sids needs g >= 2");
  for (const auto& s : sids_of_genus(g))
    if (s.phi == target_phi) out.push_back(s.sid);
  return out;
}

// ---------------------------------------------------------------------------
// Divisibility, degree bounds, map kinds.

enum class Divisibility { HDivisible, HPlusKDivisible, Neither };

inline const char* to_string(Divisibility d) {
  switch (d) {
    case Divisibility::HDivisible: return "H-divisible";
    case Divisibility::HPlusKDivisible: return "H-plus-K-divisible";
    case Divisibility::Neither: return "neither";
  }
  return "?";
}

/// True when every integral-basis coordinate is divisible by n.
inline bool numerically_divisible(const NumClass& c, const Integer& n) {
  for (const auto& x : c.integral_coords())
    if (x % n != 0) return false;
  return true;
}

inline Divisibility two_divisibility(const PicClass& h) {
  if (!numerically_divisible(h.num, 2)) return Divisibility::Neither;
  return h.eps ? Divisibility::HPlusKDivisible : Divisibility::HDivisible;
}

/// Lower bound min_pairing * sum(coeffs) for D . sum c_i E_i when D differs
/// from every E_i and meets each of them at least min_pairing times.
inline long long k3_degree_bound(const std::vector<long long>& coeffs, long long min_pairing) {
  if (min_pairing < 1) throw PreconditionError("min_pairing must be >= 1");
  long long s = 0;
  for (auto c : coeffs) {
    if (c < 1) throw PreconditionError("coefficients must be positive");
    s += c;
  }
  return min_pairing * s;
}

enum class MapKind { Hyperelliptic, Superelliptic, BasePointFree, BirationalMorphism, IsomorphismOnS, RationalMap };

inline const char* to_string(MapKind k) {
  switch (k) {
    case MapKind::Hyperelliptic: return "hyperelliptic";
    case MapKind::Superelliptic: return "superelliptic";
    case MapKind::BasePointFree: return "base-point-free";
    case MapKind::BirationalMorphism: return "birational-morphism";
    case MapKind::IsomorphismOnS: return "isomorphism-on-S";
    case MapKind::RationalMap: return "rational-map";
  }
  return "?";
}

inline MapKind parse_map_kind(std::string_view s) {
  for (MapKind k : {MapKind::Hyperelliptic, MapKind::Superelliptic, MapKind::BasePointFree,
                    MapKind::BirationalMorphism, MapKind::IsomorphismOnS, MapKind::RationalMap})
    if (s == to_string(k)) return k;
  throw SchemaError("unknown map kind: " + std::string(s));
}

/// Closed interval [lo, hi]; hi = nullopt means unbounded.
struct PhiInterval {
  int lo = 1;
  std::optional<int> hi;

  bool contains(long long v) const { return v >= lo && (!hi || v <= *hi); }
  std::string to_string() const {
    return "[" + std::to_string(lo) + ", " + (hi ? std::to_string(*hi) : std::string("inf")) + "]";
  }
  bool operator==(const PhiInterval&) const = default;
};

inline PhiInterval map_kind_phi_constraint(MapKind k) {
  switch (k) {
    case MapKind::Hyperelliptic: return {1, 1};
    case MapKind::Superelliptic:
    case MapKind::BasePointFree:
    case MapKind::BirationalMorphism: return {2, std::nullopt};
    case MapKind::IsomorphismOnS: return {3, std::nullopt};
    case MapKind::RationalMap: return {1, std::nullopt};
  }
  return {};
}

/// Map-kind constraint intersected with phi^2 <= 2p - 2.
inline PhiInterval phi_range(MapKind k, long long p) {
  PhiInterval r = map_kind_phi_constraint(k);
  const long long cs = static_cast<long long>(floor_sqrt(Integer(2 * p - 2)));
  r.hi = r.hi ? std::min<long long>(*r.hi, cs) : cs;
  return r;
}

// ---------------------------------------------------------------------------
// Class literals: E1..E10, E12 (also E_{1,2}), K (also K_S), integer
// multipliers, +, -, parentheses. Whitespace is ignored.

class ClassParser {
 public:
  explicit ClassParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  PicClass parse() {
    if (s_.empty()) throw InputError("empty class literal");
    PicClass c = expr();
    if (pos_ != s_.size()) fail("unexpected character");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("class literal '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  bool eat(char ch) {
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat(std::string_view word) {
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  PicClass expr() {
    long long sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    PicClass c = sign * term();
    while (pos_ < s_.size()) {
      if (eat('+')) c = c + term();
      else if (eat('-')) c = c + (-1) * term();
      else break;
    }
    return c;
  }

  PicClass term() {
    long long k = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      k = number();
      eat('*');
    }
    return k * factor();
  }

  long long number() {
    long long v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000LL) fail("multiplier too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  PicClass factor() {
    if (eat('(')) {
      PicClass c = expr();
      if (!eat(')')) fail("expected ')'");
      return c;
    }
    if (eat("K_S") || eat('K')) return PicClass(NumClass(), 1);
    if (eat("E_{1,2}")) return PicClass(NumClass::E12());
    if (eat('E')) {
      if (eat('_')) {
        if (eat('{')) {
          long long i = number();
          if (!eat('}')) fail("expected '}'");
          return generator(i);
        }
        return generator(number());
      }
      return generator(number());
    }
    fail("expected E<i>, K or '('");
  }

  PicClass generator(long long i) {
    if (i == 12) return PicClass(NumClass::E12());
    if (i < 1 || i > 10) fail("generator index must be 1..10 or 12");
    return PicClass(NumClass::E(static_cast<int>(i)));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline PicClass parse_class(std::string_view text) { return ClassParser(text).parse(); }

/// sum n_i E_i + b E12 (+K), written from the integral-basis coordinates.
inline std::string to_string(const PicClass& c) {
  const auto n = c.num.integral_coords();
  std::string out;
  auto term = [&](const Integer& coeff, const std::string& name) {
    if (coeff == 0) return;
    if (!out.empty()) out += coeff > 0 ? "+" : "-";
    else if (coeff < 0) out += "-";
    const Integer m = coeff < 0 ? Integer(-coeff) : coeff;
    if (m != 1) out += m.str();
    out += name;
  };
  for (std::size_t i = 0; i < 9; ++i) term(n[i], "E" + std::to_string(i + 1));
  term(n[9], "E12");
  if (c.eps) out += out.empty() ? "K" : "+K";
  return out.empty() ? "0" : out;
}

inline std::string to_string(const NumClass& c) { return to_string(PicClass(c)); }

}  // namespace enriques_lab

#endif  // ENRIQUES_LAB_ENRIQUES_HPP
