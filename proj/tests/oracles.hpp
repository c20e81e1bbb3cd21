#pragma once

// Reference implementations used only by the tests. They share no code path
// with the library routines they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <random>
#include <vector>

#include "enriques_lab/enriques.hpp"

namespace oracle {

using enriques_lab::Integer;
using enriques_lab::Rational;

// Pairing straight from rational coordinates and the E-basis Gram matrix.
inline Rational pairing(const enriques_lab::NumClass& u, const enriques_lab::NumClass& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      if (i != j) s += u.coord(i) * v.coord(j);
  return s;
}

// Exhaustive minimum of z.H over isotropic z != 0 with integral-basis
// coordinates (n1..n9, b) in [-R, R] and z.H > 0.
//
// In thirds t = 3c: t10 = b, t_i = 3n_i - 2b (i = 1, 2), t_i = 3n_i + b
// (i = 3..9). With S = sum t and Q = sum t^2, z^2 = (S^2 - Q)/9, and
// z.H = sum d_i t_i / 3 where d_i = E_i.H. The coordinates are split into
// A = {t1..t4, t10} and B = {t5..t9}; B is bucketed by (S_B, Q_B) once per
// value of b, and each A looks up the buckets with S^2 = Q_A + Q_B. Since
// z -> -z maps the box to itself and flips b, only b >= 0 is scanned and
// |z.H| is minimized. Non-primitive z never realize the minimum, because
// z/k lies in the box with a smaller degree.
class BruteForcePhi {
 public:
  explicit BruteForcePhi(int radius = 6) : r_(radius) {
    for (int b = 0; b <= r_; ++b) layers_.push_back(build(b));
  }

  long long min_degree(const enriques_lab::NumClass& h) const {
    std::array<long long, 10> d;
    for (int i = 0; i < 10; ++i) d[i] = static_cast<long long>(enriques_lab::pairing(enriques_lab::NumClass::E(i + 1), h));
    long long best = std::numeric_limits<long long>::max();  // in units of L = 3 z.H
    std::vector<long long> lb;
    for (const auto& layer : layers_) {
      // L contributions of B entries, bucket by bucket, sorted.
      lb.assign(layer.b_t.size(), 0);
      for (std::size_t e = 0; e < layer.b_t.size(); ++e) {
        const auto& t = layer.b_t[e];
        lb[e] = d[4] * t[0] + d[5] * t[1] + d[6] * t[2] + d[7] * t[3] + d[8] * t[4];
      }
      for (std::size_t k = 0; k + 1 < layer.offsets.size(); ++k)
        if (layer.offsets[k + 1] - layer.offsets[k] > 1)
          std::sort(lb.begin() + layer.offsets[k], lb.begin() + layer.offsets[k + 1]);

      for (const auto& a : layer.a) {
        const long long la = d[0] * a.t[0] + d[1] * a.t[1] + d[2] * a.t[2] + d[3] * a.t[3] + d[9] * layer.b;
        for (int sb = layer.s_min; sb <= layer.s_max; sb += 3) {
          const long long s = a.s + sb;
          const long long qb = s * s - a.q;
          if (qb < 0 || qb > layer.q_max) continue;
          const std::size_t key = layer.key(sb, static_cast<int>(qb));
          const int lo = layer.offsets[key], hi = layer.offsets[key + 1];
          if (lo == hi) continue;
          // Smallest L_B > -L_A and largest L_B < -L_A.
          auto first = lb.begin() + lo, last = lb.begin() + hi;
          auto up = std::upper_bound(first, last, -la);
          if (up != last) best = std::min(best, la + *up);
          auto down = std::lower_bound(first, last, -la);
          if (down != first) best = std::min(best, -(la + *(down - 1)));
        }
      }
    }
    if (best == std::numeric_limits<long long>::max()) return 0;
    if (best % 3 != 0) std::abort();
    return best / 3;
  }

 private:
  struct AEntry {
    std::array<int, 4> t;
    int s, q;
  };
  struct Layer {
    int b = 0;
    std::vector<AEntry> a;
    std::vector<std::array<int, 5>> b_t;  // grouped by bucket
    std::vector<int> offsets;             // bucket k occupies [offsets[k], offsets[k+1])
    int s_min = 0, s_max = 0, q_max = 0;
    std::size_t key(int sb, int qb) const {
      return static_cast<std::size_t>((sb - s_min) / 3) * static_cast<std::size_t>(q_max + 1) + static_cast<std::size_t>(qb);
    }
  };

  Layer build(int b) const {
    Layer layer;
    layer.b = b;
    const int n = 2 * r_ + 1;
    for (int i = 0; i < n * n * n * n; ++i) {
      int x = i;
      AEntry e{};
      e.s = b;
      e.q = b * b;
      for (int j = 0; j < 4; ++j) {
        const int v = x % n - r_;
        x /= n;
        e.t[j] = 3 * v + (j < 2 ? -2 * b : b);
        e.s += e.t[j];
        e.q += e.t[j] * e.t[j];
      }
      layer.a.push_back(e);
    }
    layer.s_min = 5 * (b - 3 * r_);
    layer.s_max = 5 * (b + 3 * r_);
    int tmax = 3 * r_ + b;
    layer.q_max = 5 * tmax * tmax;
    const std::size_t buckets = layer.key(layer.s_max, layer.q_max) + 1;
    std::vector<int> count(buckets + 1, 0);
    std::vector<std::array<int, 5>> all;
    std::vector<std::size_t> keys;
    for (int i = 0; i < n * n * n * n * n; ++i) {
      int x = i;
      std::array<int, 5> t{};
      int s = 0, q = 0;
      for (int j = 0; j < 5; ++j) {
        t[j] = 3 * (x % n - r_) + b;
        x /= n;
        s += t[j];
        q += t[j] * t[j];
      }
      all.push_back(t);
      keys.push_back(layer.key(s, q));
      ++count[keys.back() + 1];
    }
    for (std::size_t k = 0; k < buckets; ++k) count[k + 1] += count[k];
    layer.offsets = count;
    layer.b_t.resize(all.size());
    std::vector<int> fill(count.begin(), count.end() - 1);
    for (std::size_t e = 0; e < all.size(); ++e) layer.b_t[fill[keys[e]]++] = all[e];
    return layer;
  }

  int r_;
  std::vector<Layer> layers_;
};

// Seeded random normalized SIDs with 2 <= g <= max_genus.
inline std::vector<enriques_lab::SidCoefficients> random_sids(std::uint64_t seed, std::size_t count, int max_genus) {
  std::mt19937_64 rng(seed);
  std::vector<enriques_lab::SidCoefficients> out;
  while (out.size() < count) {
    enriques_lab::SidCoefficients s;
    const int terms = 2 + static_cast<int>(rng() % 5);
    s.a0 = (rng() % 3 == 0) ? static_cast<int>(1 + rng() % 3) : 0;
    for (int k = 0; k < terms; ++k) s.a[rng() % 10] += static_cast<int>(1 + rng() % 4);
    s.eps = static_cast<int>(rng() % 2);
    if (!s.normalized()) continue;
    const long long g = s.half_square() + 1;
    if (g < 2 || g > max_genus) continue;
    out.push_back(s);
  }
  return out;
}

}  // namespace oracle
