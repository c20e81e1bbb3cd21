#pragma once

// Seeded property suites shared by the unit tests and the acceptance binary.
// Each suite draws kCases inputs from a hand-rolled generator and counts the
// inputs that violate the property.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "enriques_lab/reports.hpp"
#include "oracles.hpp"

namespace props {

using namespace enriques_lab;

constexpr int kCases = 1000;

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  int first_failure = -1;
  bool ok() const { return cases >= kCases && failures == 0; }
};

template <class Gen, class Prop>
Outcome for_all(std::string name, std::uint64_t seed, Gen gen, Prop prop) {
  Outcome o{std::move(name)};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < kCases; ++i) {
    auto input = gen(rng);
    ++o.cases;
    if (!prop(input)) {
      if (o.first_failure < 0) o.first_failure = i;
      ++o.failures;
    }
  }
  return o;
}

inline long long uniform(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline NumClass random_class(std::mt19937_64& rng, int range = 5) {
  std::array<Integer, 10> n;
  for (auto& x : n) x = uniform(rng, -range, range);
  return NumClass::from_integral(n);
}

inline Matrix<Integer> random_unimodular(std::mt19937_64& rng, std::size_t n) {
  Matrix<Integer> t = Matrix<Integer>::identity(n);
  for (int k = 0; k < 12; ++k) {
    const std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    const Integer c = uniform(rng, -2, 2);
    for (std::size_t r = 0; r < n; ++r) t(r, i) += c * t(r, j);
  }
  if (rng() % 2)
    for (std::size_t r = 0; r < n; ++r) t(r, 0) = -t(r, 0);
  return t;
}

inline const ModelFile& genus13() {
  static const ModelFile f = load_model_file(fixture_path(fixture_dir(), "genus13_model"));
  return f;
}

inline DivClass random_div(std::mt19937_64& rng, const BlowupModel& m) {
  DivClass d(m.size());
  for (auto& x : d) x = uniform(rng, -3, 3);
  return d;
}

inline Outcome pairing_symmetric() {
  return for_all(
      "pairing symmetry", 101, [](auto& rng) { return std::pair{random_class(rng), random_class(rng)}; },
      [](const auto& p) { return pairing(p.first, p.second) == pairing(p.second, p.first); });
}

inline Outcome pairing_bilinear() {
  struct In {
    NumClass u, v, w;
    Integer a, b;
  };
  return for_all(
      "pairing bilinearity", 102,
      [](auto& rng) {
        return In{random_class(rng), random_class(rng), random_class(rng), Integer(uniform(rng, -7, 7)),
                  Integer(uniform(rng, -7, 7))};
      },
      [](const In& x) {
        return pairing(x.a * x.u + x.b * x.v, x.w) == x.a * pairing(x.u, x.w) + x.b * pairing(x.v, x.w);
      });
}

inline Outcome pairing_matches_oracle() {
  return for_all(
      "pairing vs rational coordinates", 103, [](auto& rng) { return std::pair{random_class(rng), random_class(rng)}; },
      [](const auto& p) { return Rational(pairing(p.first, p.second)) == oracle::pairing(p.first, p.second); });
}

inline Outcome lattice_even() {
  return for_all(
      "even lattice", 104, [](auto& rng) { return random_class(rng, 9); },
      [](const NumClass& u) { return square(u) % 2 == 0; });
}

inline Outcome triple_symmetric() {
  const auto& m = genus13().model;
  return for_all(
      "triple product symmetry", 201,
      [&](auto& rng) { return std::array{random_div(rng, m), random_div(rng, m), random_div(rng, m)}; },
      [&](const auto& d) {
        const Integer v = m.triple(d[0], d[1], d[2]);
        return v == m.triple(d[1], d[0], d[2]) && v == m.triple(d[2], d[1], d[0]) && v == m.triple(d[0], d[2], d[1]) &&
               v == m.triple(d[1], d[2], d[0]) && v == m.triple(d[2], d[0], d[1]);
      });
}

inline Outcome triple_trilinear() {
  const auto& m = genus13().model;
  struct In {
    DivClass a, a2, b, c;
    Integer s, t;
  };
  return for_all(
      "triple product trilinearity", 202,
      [&](auto& rng) {
        return In{random_div(rng, m), random_div(rng, m), random_div(rng, m), random_div(rng, m),
                  Integer(uniform(rng, -4, 4)), Integer(uniform(rng, -4, 4))};
      },
      [&](const In& x) {
        const DivClass lin = x.s * x.a + x.t * x.a2;
        return m.triple(lin, x.b, x.c) == x.s * m.triple(x.a, x.b, x.c) + x.t * m.triple(x.a2, x.b, x.c) &&
               m.triple(x.b, lin, x.c) == x.s * m.triple(x.b, x.a, x.c) + x.t * m.triple(x.b, x.a2, x.c);
      });
}

inline Outcome e_basis_determinant() {
  const Lattice e = e_basis_lattice();
  return for_all(
      "E-basis Gram determinant -9", 301,
      [](auto& rng) {
        std::array<std::size_t, 10> p;
        for (std::size_t i = 0; i < 10; ++i) p[i] = i;
        std::shuffle(p.begin(), p.end(), rng);
        return p;
      },
      [&](const auto& p) {
        Matrix<Integer> t(10, 10, Integer(0));
        for (std::size_t i = 0; i < 10; ++i) t(p[i], i) = 1;
        return determinant(congruent(t, e.gram())) == -9;
      });
}

inline Outcome integral_basis_determinant() {
  const Matrix<Integer> g = integral_basis_lattice().gram();
  return for_all(
      "integral-basis Gram determinant +-1", 302, [](auto& rng) { return random_unimodular(rng, 10); },
      [&](const Matrix<Integer>& t) {
        const Integer d = determinant(congruent(t, g));
        return abs(determinant(t)) == 1 && (d == 1 || d == -1) && d == determinant(g);
      });
}

inline Outcome determinant_multiplicative() {
  return for_all(
      "determinant multiplicativity", 303,
      [](auto& rng) {
        const std::size_t n = 1 + rng() % 5;
        Matrix<Integer> a(n, n), b(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = uniform(rng, -5, 5);
            b(i, j) = uniform(rng, -5, 5);
          }
        return std::pair{a, b};
      },
      [](const auto& p) { return determinant(p.first * p.second) == determinant(p.first) * determinant(p.second); });
}

inline Outcome rank_nullity() {
  return for_all(
      "rank plus nullity", 304,
      [](auto& rng) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
        Matrix<Integer> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? Integer(0) : Integer(uniform(rng, -4, 4));
        return m;
      },
      [](const Matrix<Integer>& m) { return rank(m) + kernel_basis(m).size() == m.cols(); });
}

// Permuting E3..E10 and swapping E1, E2 is an isometry fixing E12.
inline Outcome phi_relabeling() {
  return for_all(
      "phi under relabeling", 401,
      [](auto& rng) {
        auto s = oracle::random_sids(rng(), 1, 10).front();
        SidCoefficients t = s;
        std::shuffle(t.a.begin() + 2, t.a.end(), rng);
        if (rng() % 2) std::swap(t.a[0], t.a[1]);
        return std::pair{s, t};
      },
      [](const auto& p) {
        const NumClass h = p.first.to_pic().num;
        const auto r = phi_with_witness(h);
        return r.phi == phi(p.second.to_pic().num) && square(r.witness) == 0 && pairing(r.witness, h) == r.phi &&
               r.phi * r.phi <= square(h);
      });
}

inline Outcome deterministic_reports() {
  return for_all(
      "deterministic report output", 501, [](auto& rng) { return oracle::random_sids(rng(), 1, 9).front(); },
      [](const SidCoefficients& s) {
        Table1Row row;
        row.sid = s;
        row.sid_text = s.to_string();
        row.p = s.half_square() + 1;
        row.phi = static_cast<long long>(phi(s.to_pic()));
        row.component = "random";
        const Report a = verify_table1({row}), b = verify_table1({row});
        return a.all_pass() && a.to_json().dump() == b.to_json().dump() && a.to_text() == b.to_text();
      });
}

inline Outcome class_literal_round_trip() {
  return for_all(
      "class literal round trip", 601,
      [](auto& rng) { return PicClass{random_class(rng, 4), static_cast<int>(rng() % 2)}; },
      [](const PicClass& c) { return c.num.is_zero() || parse_class(to_string(c)) == c; });
}

// With no trivial classes, divisibility mod 2 is coordinatewise parity.
inline Outcome divisibility_parity() {
  const auto& m = genus13().model;
  return for_all(
      "divisibility mod 2 vs parity", 701, [&](auto& rng) { return random_div(rng, m); },
      [&](const DivClass& d) {
        bool even = true;
        for (const auto& x : d) even = even && x % 2 == 0;
        return divisible_mod_trivial(m, d, {}, 2) == even &&
               divisible_mod_trivial(m, Integer(2) * d + m.generator(1), {m.generator(1)}, 2);
      });
}

inline std::vector<std::function<Outcome()>> all_suites() {
  return {pairing_symmetric,  pairing_bilinear,    pairing_matches_oracle,     lattice_even,
          triple_symmetric,   triple_trilinear,    e_basis_determinant,        integral_basis_determinant,
          determinant_multiplicative, rank_nullity, phi_relabeling,            deterministic_reports,
          class_literal_round_trip,   divisibility_parity};
}

}  // namespace props
