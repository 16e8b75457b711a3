#pragma once

// Test-only generators and brute-force oracles. The oracles never call the
// library algorithms under test: evaluation goes straight through the raw
// pieces, and preimages are found by scanning.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "plh/circle.hpp"
#include "plh/pl_map.hpp"

namespace plh::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long lo, long hi, long max_den) {
  const long den = uniform(rng, 1, max_den);
  return Rational(uniform(rng, lo * den, hi * den), den);
}

/// Sorted distinct breakpoints in [0,1) starting at 0.
inline std::vector<Rational> random_breaks(Rng& rng, int max_pieces, long max_den) {
  std::set<Rational> xs{Rational(0)};
  const int n = static_cast<int>(uniform(rng, 1, max_pieces));
  while (static_cast<int>(xs.size()) < n) {
    const long den = uniform(rng, 2, max_den);
    xs.insert(Rational(uniform(rng, 1, den - 1), den));
  }
  return {xs.begin(), xs.end()};
}

/// Pieces through the points (xs[i], ys[i]) with wrap value ys[0] + wrap.
inline std::vector<Piece> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                                      const Rational& wrap) {
  std::vector<Piece> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rational x1 = i + 1 < xs.size() ? xs[i + 1] : Rational(1);
    const Rational y1 = i + 1 < xs.size() ? ys[i + 1] : ys[0] + wrap;
    out.push_back({xs[i], ys[i], (y1 - ys[i]) / (x1 - xs[i])});
  }
  return out;
}

/// Random lift. Displacements at the breakpoints are drawn from a small set
/// containing 0 twice, so fixed points and fixed intervals are common.
inline PLLift random_lift(Rng& rng, int max_pieces = 4, long max_den = 8) {
  static const std::vector<Rational> kDisp{Rational(-1, 6), Rational(-1, 12), Rational(0), Rational(0),
                                           Rational(1, 12), Rational(1, 6), Rational(1, 5)};
  for (;;) {
    const auto xs = random_breaks(rng, max_pieces, max_den);
    const Rational shift(uniform(rng, -1, 1));
    std::vector<Rational> ys;
    for (const auto& x : xs) ys.push_back(x + shift + kDisp[uniform(rng, 0, kDisp.size() - 1)]);
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) monotone = monotone && ys[i] < ys[i + 1];
    monotone = monotone && ys.back() < ys[0] + 1;
    if (monotone) return PLLift::from_pieces(interpolate(xs, ys, 1));
  }
}

/// Random lift with arbitrary positive increments (generic dynamics).
inline PLLift random_generic_lift(Rng& rng, int max_pieces = 4, long max_den = 8) {
  const auto xs = random_breaks(rng, max_pieces, max_den);
  std::vector<long> w;
  long total = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) total += w.emplace_back(uniform(rng, 1, 6));
  std::vector<Rational> ys{random_rational(rng, 0, 1, max_den)};
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) ys.push_back(ys.back() + Rational(w[i], total));
  return PLLift::from_pieces(interpolate(xs, ys, 1));
}

inline PLFunc random_func(Rng& rng, int max_pieces = 4, long max_den = 8) {
  const auto xs = random_breaks(rng, max_pieces, max_den);
  std::vector<Rational> ys;
  for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(random_rational(rng, -1, 1, max_den));
  return PLFunc::from_pieces(interpolate(xs, ys, 0));
}

// ----------------------------------------------------------------------
// Oracles.

/// F(x) evaluated by a linear scan of the raw pieces.
inline Rational oracle_eval(const std::vector<Piece>& pieces, const Rational& wrap, const Rational& x) {
  const Rational n = x.floor();
  const Rational t = x - n;
  const Piece* hit = &pieces.front();
  for (const auto& p : pieces) {
    if (p.x <= t) hit = &p;
  }
  return hit->v + hit->s * (t - hit->x) + wrap * n;
}

inline Rational oracle_eval(const PLLift& f, const Rational& x) { return oracle_eval(f.pieces(), 1, x); }
inline Rational oracle_eval(const PLFunc& f, const Rational& x) { return oracle_eval(f.pieces(), 0, x); }

/// F^{-1}(y) by scanning the pieces of F over the translates of [0,1) that
/// can reach y.
inline Rational oracle_preimage(const PLLift& f, const Rational& y) {
  const auto& ps = f.pieces();
  for (long n = (y - ps.front().v).floor().to_long() - 1;; ++n) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const Rational x0 = ps[i].x + n;
      const Rational x1 = (i + 1 < ps.size() ? ps[i + 1].x : Rational(1)) + n;
      const Rational y0 = oracle_eval(f, x0);
      const Rational y1 = oracle_eval(f, x1);
      if (y0 <= y && y < y1) return x0 + (y - y0) / ps[i].s;
    }
  }
}

/// Sorted grid on [0,1): every given cut reduced mod 1, the points j/den,
/// and the midpoints of consecutive grid points.
inline std::vector<Rational> refining_grid(const std::vector<Rational>& cuts, long den = 24) {
  std::set<Rational> pts;
  for (const auto& c : cuts) pts.insert(c.frac());
  for (long j = 0; j < den; ++j) pts.insert(Rational(j, den));
  std::vector<Rational> sorted(pts.begin(), pts.end());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out.push_back(sorted[i]);
    const Rational next = i + 1 < sorted.size() ? sorted[i + 1] : Rational(1);
    out.push_back((sorted[i] + next) / 2);
  }
  return out;
}

inline std::vector<Rational> breaks_of(const PLLift& f) {
  std::vector<Rational> xs;
  for (const auto& p : f.pieces()) xs.push_back(p.x);
  return xs;
}

/// Zeros of F(x) - x piece by piece, solved directly from the raw data.
inline std::vector<Rational> oracle_fixed_candidates(const PLLift& f) {
  std::vector<Rational> out;
  const auto& ps = f.pieces();
  for (long shift = -3; shift <= 3; ++shift) {
    for (const auto& p : ps) {
      // v + s (x - x_i) = x + shift
      if (p.s == 1) continue;
      out.push_back((p.v - p.s * p.x - shift) / (1 - p.s));
    }
  }
  return out;
}

/// Mixed corpus of circle maps: maps with fixed points, conjugated rational
/// rotations and generic maps. `known` is set for the conjugated rotations.
struct CircleSample {
  CircleMap map;
  std::optional<Rational> known;
};

inline std::vector<CircleSample> circle_corpus(Rng& rng, int n) {
  std::vector<CircleSample> out;
  for (int i = 0; i < n; ++i) {
    switch (i % 3) {
      case 0:
        out.push_back({CircleMap(random_lift(rng)), std::nullopt});
        break;
      case 1: {
        const long q = uniform(rng, 1, 12);
        const Rational rho(uniform(rng, 0, q - 1), q);
        const PLLift h = random_generic_lift(rng);
        const PLLift m = compose(h, compose(PLLift::translation(rho), inverse(h)));
        out.push_back({CircleMap(m), rho});
        break;
      }
      default:
        out.push_back({CircleMap(random_generic_lift(rng, 3, 6)), std::nullopt});
    }
  }
  return out;
}

/// Whether [a_lo, a_hi] lies inside [b_lo, b_hi] after some integer shift.
inline bool nested_mod_one(const Rational& a_lo, const Rational& a_hi, const Rational& b_lo, const Rational& b_hi) {
  const Rational s = (b_lo - a_lo).floor();
  for (const Rational& k : {s, s + 1}) {
    if (b_lo <= a_lo + k && a_hi + k <= b_hi) return true;
  }
  return false;
}

}  // namespace plh::testing
