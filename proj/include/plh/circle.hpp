#pragma once

// Orientation-preserving PL homeomorphisms of the circle R/Z, handled
// through lifts.

#include <string>
#include <vector>

#include "plh/pl_map.hpp"

namespace plh {

/// A circle map; the stored lift is the one with lift(0) in [0,1).
class CircleMap {
 public:
  explicit CircleMap(const PLLift& lift);
  static CircleMap rotation(const Rational& r) { return CircleMap(PLLift::translation(r)); }
  static CircleMap identity() { return rotation(0); }

  const PLLift& lift() const { return lift_; }
  /// Image in [0,1).
  Rational operator()(const Rational& x) const { return lift_(x).frac(); }

  friend bool operator==(const CircleMap&, const CircleMap&) = default;

 private:
  PLLift lift_;
};

CircleMap compose(const CircleMap& f, const CircleMap& g);
CircleMap inverse(const CircleMap& f);
CircleMap power(const CircleMap& f, long n);

struct RotationOptions {
  long q_max = 64;
  Rational width{1, 1024};
  long budget = 1L << 16;  // lift applications for the bracket
};

struct RotationResult {
  enum class Kind { exact, bracket };

  Kind kind = Kind::exact;
  Rational value;  // exact case, in [0,1)
  long period = 0;  // exact case: q with F^q(witness) = witness + p
  Rational witness;  // exact case: a periodic point
  Rational lower, upper;  // bracket case, lower in [0,1)
  bool width_met = true;  // bracket case: false when the budget ran out
  long iterations = 0;

  /// Whether r (mod 1) is consistent with the result.
  bool contains(const Rational& r) const;
  /// `exact p/q` or `bracket [a/b, c/d]`.
  std::string str() const;
};

/// Tests q = 1..q_max for a lift power F^q - p with a fixed point; the
/// first hit is the exact rotation number p/q. Otherwise brackets the
/// translation number by intersecting [(F^n(0)-1)/n, (F^n(0)+1)/n] over n
/// until the width is reached or the budget is spent. F^n(0) is enclosed
/// by outward-rounded orbits, so brackets stay sound and cheap.
RotationResult rotation_number(const CircleMap& m, const RotationOptions& opts = {});

/// Fixed points on the circle: x with F(x) = x + p for some integer p.
FixedSet circle_fix(const CircleMap& m);

/// Whether rot(m^n) is consistent with n rot(m) mod 1.
bool power_rotation_check(const CircleMap& m, long n, const RotationOptions& opts = {});

// ----------------------------------------------------------------------
// Klein bottle group <f, g | f g f^-1 = g^-1> on the circle.

struct KleinPair {
  CircleMap f;
  CircleMap g;
};

/// f = rotation by 1/2, g = h on [0,1/2] and f h^-1 f^-1 on [1/2,1].
/// `half` holds the pieces of h, a PL homeomorphism of [0,1/2] fixing the
/// endpoints.
KleinPair klein_circle_pair(const std::vector<Piece>& half);

/// f = h on [0,1/2] and its rotation-by-1/2 conjugate on [1/2,1], so f has
/// fixed points and commutes with g = rotation by 1/2.
KleinPair symmetric_klein_pair(const std::vector<Piece>& half);

bool klein_relation_holds(const CircleMap& f, const CircleMap& g);

struct ArcReport {
  Rational from, to;  // open arc (from, to), possibly with to > 1
  std::vector<Interval> fix_g2;  // Fix(g^2) inside the arc
  bool infinite = false;  // contains a non-degenerate interval
};

struct ContainmentReport {
  bool relation_holds = false;
  FixedSet fix_f;
  FixedSet fix_g2;
  bool containment = false;  // Fix(f) subset of Fix(g^2)
  std::vector<ArcReport> arcs;  // components of the complement of Fix(f)

  bool passed() const;
  std::string str() const;
};

/// Checks Fix(f) inside Fix(g^2) and that Fix(g^2) is infinite on every
/// component of the complement of Fix(f). A failing relation is reported,
/// not thrown. Throws std::invalid_argument when Fix(f) is empty.
ContainmentReport klein_fix_containment(const CircleMap& f, const CircleMap& g);

}  // namespace plh
