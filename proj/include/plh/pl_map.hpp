#pragma once

// Piecewise-linear maps with rational data on the fundamental domain [0,1).
//
// PLFunc is a continuous 1-periodic function; PLLift is an orientation
// preserving homeomorphism F of the line with F(x+1) = F(x)+1. Both are
// stored as pieces (x_i, v_i, s_i): on [x_i, x_{i+1}) the map is
// v_i + s_i (x - x_i). Pieces are left-closed right-open.
//
// Canonical form: breakpoints strictly increasing, first breakpoint 0, no
// two consecutive pieces with equal slope. Equality of canonical forms is
// equality of maps, so operator== is exact map equality.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plh/rational.hpp"

namespace plh {

struct Piece {
  Rational x;  // breakpoint in [0,1)
  Rational v;  // value at x
  Rational s;  // slope on [x, next breakpoint)

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Invalid piece data: discontinuity, bad breakpoints, non-monotone lift.
class PLError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closed interval [lo, hi]; lo == hi is a point.
struct Interval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A closed 1-periodic subset of the line, described within one period.
///
/// Items are disjoint, non-touching, sorted closed intervals inside [0,1].
/// An item ending at 1 stands for [lo,1) together with its periodic
/// translate; in that case 0 is always also present.
class FixedSet {
 public:
  static FixedSet empty() { return FixedSet{}; }
  static FixedSet full();
  /// Normalizes arbitrary intervals: reduces into one period, sorts, merges
  /// overlapping or touching items.
  static FixedSet from_items(std::vector<Interval> items);

  bool is_full() const { return full_; }
  bool is_empty() const { return !full_ && items_.empty(); }
  const std::vector<Interval>& items() const { return items_; }

  bool contains(const Rational& x) const;
  bool subset_of(const FixedSet& other) const;
  FixedSet intersect(const FixedSet& other) const;
  FixedSet unite(const FixedSet& other) const;
  /// Smallest point in [0,1) of the set, if any.
  std::optional<Rational> first_point() const;

  std::string str() const;

  friend bool operator==(const FixedSet&, const FixedSet&) = default;

 private:
  std::vector<Interval> items_;
  bool full_ = false;
};

class PLFunc {
 public:
  /// Validates and canonicalizes raw pieces covering [0,1).
  static PLFunc from_pieces(std::vector<Piece> raw);
  static PLFunc constant(const Rational& c);

  const std::vector<Piece>& pieces() const { return pieces_; }
  Rational operator()(const Rational& x) const;
  /// Right derivative at x.
  Rational slope_at(const Rational& x) const;

  friend bool operator==(const PLFunc&, const PLFunc&) = default;

 private:
  std::vector<Piece> pieces_;
};

class PLLift {
 public:
  /// Validates and canonicalizes raw pieces of F on [0,1).
  static PLLift from_pieces(std::vector<Piece> raw);
  static PLLift identity() { return translation(Rational(0)); }
  static PLLift translation(const Rational& t);

  const std::vector<Piece>& pieces() const { return pieces_; }
  Rational operator()(const Rational& x) const;
  Rational slope_at(const Rational& x) const;
  /// Exact F^{-1}(y).
  Rational preimage(const Rational& y) const;

  bool is_identity() const { return *this == identity(); }
  /// The translation amount if F(x) = x + t.
  std::optional<Rational> translation_amount() const;

  friend bool operator==(const PLLift&, const PLLift&) = default;

 private:
  std::vector<Piece> pieces_;
};

// Algebra of lifts.
PLLift compose(const PLLift& f, const PLLift& g);  // f o g
PLFunc compose(const PLFunc& tau, const PLLift& sigma);  // tau o sigma
PLLift inverse(const PLLift& f);
PLLift power(const PLLift& f, long n);

// Pointwise linear algebra of periodic functions.
struct Term {
  Rational coefficient;
  PLFunc fn;
};
PLFunc linear_combine(std::span<const Term> terms);
PLFunc operator+(const PLFunc& a, const PLFunc& b);
PLFunc operator-(const PLFunc& a, const PLFunc& b);
PLFunc operator-(const PLFunc& a);
PLFunc operator*(const Rational& c, const PLFunc& a);
/// x -> tau(x - s).
PLFunc shift(const PLFunc& tau, const Rational& s);

/// x -> F(x) - x, a 1-periodic function.
PLFunc displacement(const PLLift& f);
FixedSet zero_set(const PLFunc& tau);
FixedSet fixed_set(const PLLift& f);
/// Exact maximum of |tau| over a period.
Rational sup_abs(const PLFunc& tau);
/// Exact maximum of |F(x) - x|.
Rational sup_displacement(const PLLift& f);

/// Image f(S) of a periodic set under a lift.
FixedSet image(const FixedSet& set, const PLLift& f);

/// Compact `[x:v,s; ...]` rendering of pieces.
std::string pieces_str(const std::vector<Piece>& pieces);

/// Builds a lift from pieces given on a translate [start, start+1) of the
/// fundamental domain (first breakpoint must be `start`).
PLLift lift_from_window(const Rational& start, std::vector<Piece> raw);

/// The lift F with F = h on [0,1/2) and F(x+1/2) = F^{-1}(x) + 1/2, where
/// `half` are the pieces of a homeomorphism of [0,1/2] fixing both ends.
PLLift half_shift_extension(const std::vector<Piece>& half);

}  // namespace plh
