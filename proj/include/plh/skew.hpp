#pragma once

// Skew-product homeomorphisms of the plane and the named generators built
// from them.
//
// Over the x axis a SkewMap is (x, y) -> (base(x), y + fiber(x)); over the
// y axis it is the mirror image (x, y) -> (x + fiber(y), base(y)). Maps over
// one axis form a group under
//
//   (s1, t1) o (s2, t2) = (s1 o s2, t2 + t1 o s2),   (s, t)^-1 = (s^-1, -t o s^-1).
//
// Pure translations are the only maps representable over both axes.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "plh/pl_map.hpp"

namespace plh {

enum class Axis { over_x, over_y };

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

class OrientationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SkewMap {
 public:
  SkewMap(Axis axis, PLLift base, PLFunc fiber)
      : axis_(axis), base_(std::move(base)), fiber_(std::move(fiber)) {}

  static SkewMap identity(Axis axis = Axis::over_x);
  /// (x, y) -> (x + dx, y + dy), represented over `axis`.
  static SkewMap translation(const Rational& dx, const Rational& dy, Axis axis = Axis::over_x);

  Axis axis() const { return axis_; }
  const PLLift& base() const { return base_; }
  const PLFunc& fiber() const { return fiber_; }

  Point operator()(const Point& p) const;

  /// (dx, dy) if the map is a translation of the plane.
  std::optional<std::pair<Rational, Rational>> as_translation() const;
  /// The same planar map represented over `axis`, when representable.
  std::optional<SkewMap> over(Axis axis) const;

  friend bool operator==(const SkewMap&, const SkewMap&) = default;

 private:
  Axis axis_;
  PLLift base_;
  PLFunc fiber_;
};

/// Composition a o b; both must be over the same axis.
SkewMap compose(const SkewMap& a, const SkewMap& b);
SkewMap inverse(const SkewMap& a);
SkewMap power(const SkewMap& a, long n);
/// Equality as planar homeomorphisms (not just as representations).
bool skew_equal(const SkewMap& a, const SkewMap& b);
/// Conjugation by the axis swap (x, y) -> (y, x).
SkewMap mirror(const SkewMap& a);
/// Maximum over both coordinates of the exact sup displacement.
Rational sup_displacement(const SkewMap& a);

/// Short human-readable form: `id`, `a^{t}`, `b^{t}`, `c^{t}`, or the pieces.
std::string describe(const SkewMap& a);

// ----------------------------------------------------------------------
// Named maps.

/// 1-periodic tent: -4x+1 on [0,1/2), 4x-3 on [1/2,1).
PLFunc gamma0();
/// x/2 on [0,1/3), 2x-1/2 on [1/3,1/2), extended by d(x+1/2) = d^{-1}(x)+1/2.
PLLift delta0();

SkewMap family_a(const Rational& t);  // (x + t, y)
SkewMap family_b(const Rational& t);  // (x, y + t)
SkewMap family_c(const Rational& t);  // (x, y + t gamma0(x))

enum class Symbol { alpha, beta, gamma, delta, gamma_bar, delta_bar, eta };

/// Fiber parameter of gamma = c^t.
Rational gamma_parameter();

/// alpha = a^{1/12}, beta = b^{1/12}, gamma = c^{1/168}, delta = (delta0(x), y),
/// and the mirrored gamma_bar, delta_bar. Throws for eta, which swaps the
/// axes and is not a SkewMap.
SkewMap generator(Symbol s);

/// Named lookup: `a`, `b`, `c` (one-parameter families, parameter
/// required) or `alpha`, `beta`, `gamma`, `delta`, `gamma_bar`,
/// `delta_bar` (no parameter). Throws std::invalid_argument otherwise.
SkewMap generator(std::string_view name, const std::optional<Rational>& t = std::nullopt);

/// g_k = alpha^k delta^-2 gamma delta^2 alpha^-k, computed by composition.
SkewMap make_g(long k);
/// Product over k = 0..11 of g_k^exponent, k ascending.
SkewMap product_g(int exponent);
/// Sum over k = 0..11 of gamma0(delta0^2(x - k/12)).
PLFunc phi();

}  // namespace plh
