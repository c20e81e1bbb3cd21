#ifndef ENRIQUES_LAB_POLYNOMIAL_HPP
#define ENRIQUES_LAB_POLYNOMIAL_HPP

// Sparse multivariate polynomials with rational coefficients. Terms are kept
// in graded lexicographic order, highest first, with x_0 > x_1 > ...

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace enriques_lab {

using Exponents = std::vector<int>;

inline int degree_of(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;
  }
};

class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : n_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.t_[Exponents(nvars, 0)] = c;
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DimensionMismatch("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(std::move(e));
  }
  static Polynomial monomial(Exponents e, const Rational& c = 1) {
    Polynomial p(e.size());
    for (int x : e)
      if (x < 0) throw PreconditionError("negative exponent");
    if (c != 0) p.t_[std::move(e)] = c;
    return p;
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  /// -1 for the zero polynomial.
  int degree() const { return t_.empty() ? -1 : degree_of(t_.begin()->first); }
  int lowest_degree() const { return t_.empty() ? -1 : degree_of(t_.rbegin()->first); }
  bool is_homogeneous() const { return t_.empty() || degree() == lowest_degree(); }

  Rational coefficient(const Exponents& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rational(0) : it->second;
  }

  Polynomial homogeneous_part(int d) const {
    Polynomial p(n_);
    for (const auto& [e, c] : t_)
      if (degree_of(e) == d) p.t_.emplace(e, c);
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    same_ring(o);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    same_ring(o);
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.t_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Rational& k, Polynomial a) {
    if (k == 0) return Polynomial(a.n_);
    for (auto& [e, c] : a.t_) c *= k;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.same_ring(b);
    Polynomial p(a.n_);
    Exponents e(a.n_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    return p;
  }
  bool operator==(const Polynomial& o) const { return n_ == o.n_ && t_ == o.t_; }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(n_, 1), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  Polynomial derivative(std::size_t i) const {
    if (i >= n_) throw DimensionMismatch("variable index out of range");
    Polynomial p(n_);
    for (const auto& [e, c] : t_) {
      if (e[i] == 0) continue;
      Exponents f = e;
      --f[i];
      p.add_term(f, c * e[i]);
    }
    return p;
  }

  /// Replaces variable i by images[i]; the result lives in the images' ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != n_) throw DimensionMismatch("substitution needs one image per variable");
    const std::size_t m = images.empty() ? 0 : images.front().nvars();
    for (const auto& q : images)
      if (q.nvars() != m) throw DimensionMismatch("substitution images live in different rings");
    std::vector<std::vector<Polynomial>> powers(n_);
    Polynomial out(m);
    for (const auto& [e, c] : t_) {
      Polynomial term = constant(m, c);
      for (std::size_t i = 0; i < n_; ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(m, 1));
        while (pw.size() <= static_cast<std::size_t>(e[i])) pw.push_back(pw.back() * images[i]);
        term = term * pw[e[i]];
      }
      out += term;
    }
    return out;
  }

  Rational evaluate(const std::vector<Rational>& x) const {
    if (x.size() != n_) throw DimensionMismatch("evaluation point has wrong arity");
    Rational s = 0;
    for (const auto& [e, c] : t_) {
      Rational t = c;
      for (std::size_t i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      s += t;
    }
    return s;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (names.size() < n_) throw DimensionMismatch("not enough variable names");
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : t_) {
      const bool neg = c < 0;
      const Rational a = neg ? Rational(-c) : c;
      if (out.empty()) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      std::string mono;
      for (std::size_t i = 0; i < n_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) out += a.str();
      else if (a == 1) out += mono;
      else out += a.str() + "*" + mono;
    }
    return out;
  }

 private:
  void same_ring(const Polynomial& o) const {
    if (n_ != o.n_) throw DimensionMismatch("polynomials over different variable sets");
  }
  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }

  std::size_t n_ = 0;
  Terms t_;
};

/// All exponent vectors of total degree d in n variables, graded-lex descending.
inline std::vector<Exponents> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

inline std::vector<Rational> coefficient_vector(const Polynomial& p, const std::vector<Exponents>& basis) {
  std::vector<Rational> v;
  v.reserve(basis.size());
  std::size_t hit = 0;
  for (const auto& e : basis) {
    const Rational c = p.coefficient(e);
    if (c != 0) ++hit;
    v.push_back(c);
  }
  if (hit != p.size()) throw DimensionMismatch("polynomial has terms outside the monomial basis");
  return v;
}

inline Polynomial from_coefficients(const std::vector<Rational>& v, const std::vector<Exponents>& basis) {
  if (v.size() != basis.size()) throw DimensionMismatch("coefficient vector length mismatch");
  const std::size_t n = basis.empty() ? 0 : basis.front().size();
  Polynomial p(n);
  for (std::size_t i = 0; i < v.size(); ++i) p += Polynomial::monomial(basis[i], v[i]);
  return p;
}

/// The same polynomial over a ring with extra trailing variables.
inline Polynomial extend_ring(const Polynomial& p, std::size_t nvars) {
  if (nvars < p.nvars()) throw DimensionMismatch("cannot shrink a polynomial ring");
  Polynomial q(nvars);
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f.resize(nvars, 0);
    q += Polynomial::monomial(std::move(f), c);
  }
  return q;
}

/// p = c q for some nonzero rational c (both nonzero).
inline bool proportional(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero() || p.size() != q.size()) return false;
  const Rational c = p.terms().begin()->second / q.terms().begin()->second;
  return p == c * q;
}

/// Parser for polynomial literals over named variables: integers, names,
/// + - * ^ and parentheses.
class PolynomialParser {
 public:
  PolynomialParser(std::vector<std::string> names, std::string_view text) : names_(std::move(names)) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  Polynomial parse() {
    if (s_.empty()) throw InputError("empty polynomial");
    Polynomial p = sum();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial sum() {
    Polynomial p(names_.size());
    if (eat('-')) p -= product();
    else {
      eat('+');
      p += product();
    }
    while (pos_ < s_.size()) {
      if (eat('+')) p += product();
      else if (eat('-')) p -= product();
      else break;
    }
    return p;
  }
  Polynomial product() {
    Polynomial p = power();
    while (eat('*')) p = p * power();
    return p;
  }
  Polynomial power() {
    Polynomial b = atom();
    if (eat('^')) {
      unsigned k = 0;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) k = k * 10 + (s_[pos_++] - '0');
      b = b.pow(k);
    }
    return b;
  }
  Polynomial atom() {
    if (eat('(')) {
      Polynomial p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Integer k = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) k = k * 10 + (s_[pos_++] - '0');
      return Polynomial::constant(names_.size(), Rational(k));
    }
    std::string id;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
      id += s_[pos_++];
    if (id.empty()) fail("expected a number, variable or '('");
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == id) return Polynomial::variable(names_.size(), i);
    fail("unknown variable '" + id + "'");
  }

  std::vector<std::string> names_;
  std::string s_;
  std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::vector<std::string>& names, std::string_view text) {
  return PolynomialParser(names, text).parse();
}

inline std::vector<std::string> indexed_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

}  // namespace enriques_lab

#endif  // ENRIQUES_LAB_POLYNOMIAL_HPP
