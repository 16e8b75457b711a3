#pragma once

// Actions of Z^2 = <f, g | f g f^-1 = g> and the Klein bottle group
// K = <f, g | f g f^-1 = g^-1> on the line, built from a seed.
//
// With f(x) = x + dir and I the unit interval joining x0 and f(x0), any PL
// homeomorphism h of I fixing its ends extends uniquely to g with
//
//   g restricted to f^n(I) = f^n h^(eps^n) f^-n,
//
// eps = +1 for Z^2 and -1 for K. The extension is materialized on a finite
// window of blocks f^n(I), n_min <= n <= n_max.

#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plh/pl_map.hpp"
#include "plh/skew.hpp"

namespace plh {

/// PL homeomorphism of [lo, hi] fixing both ends; pieces as in PLLift but
/// with breakpoints in [lo, hi).
class IntervalMap {
 public:
  static IntervalMap from_pieces(const Rational& lo, const Rational& hi, std::vector<Piece> raw);
  static IntervalMap identity(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }

  /// Requires contains(x).
  Rational operator()(const Rational& x) const;
  Rational preimage(const Rational& y) const;

  friend bool operator==(const IntervalMap&, const IntervalMap&) = default;

 private:
  Rational lo_, hi_;
  std::vector<Piece> pieces_;
};

IntervalMap inverse(const IntervalMap& m);
/// a o b on a common domain.
IntervalMap compose(const IntervalMap& a, const IntervalMap& b);
/// Conjugate by x -> x + d: the map x -> m(x - d) + d on the shifted domain.
IntervalMap translate(const IntervalMap& m, const Rational& d);
/// Fixed points of m as merged closed intervals (points are degenerate).
std::vector<Interval> fixed_points(const IntervalMap& m);

enum class ActionGroup { z2, klein };

class ActionSpec {
 public:
  /// Validates that `seed` lives on the interval joining x0 and x0 + dir.
  ActionSpec(ActionGroup group, int direction, Rational x0, IntervalMap seed);

  ActionGroup group() const { return group_; }
  int epsilon() const { return group_ == ActionGroup::z2 ? 1 : -1; }
  int direction() const { return direction_; }
  const Rational& x0() const { return x0_; }
  const IntervalMap& seed() const { return seed_; }

 private:
  ActionGroup group_;
  int direction_;
  Rational x0_;
  IntervalMap seed_;
};

/// Escaping orbit during windowed evaluation; widen the window.
class OrbitEscape : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class WindowedMap {
 public:
  WindowedMap(long n_min, int direction, std::vector<IntervalMap> blocks);

  long n_min() const { return n_min_; }
  long n_max() const { return n_min_ + static_cast<long>(blocks_.size()) - 1; }
  int direction() const { return direction_; }
  const IntervalMap& block(long n) const;
  const std::vector<IntervalMap>& blocks() const { return blocks_; }
  /// Copy with block n replaced.
  WindowedMap with_block(long n, IntervalMap m) const;

  /// Union of all blocks.
  Interval domain() const;
  Rational apply(const Rational& x) const;
  Rational apply_inverse(const Rational& x) const;
  /// Fixed points over the whole window, merged.
  std::vector<Interval> fixed_points() const;

 private:
  const IntervalMap& block_at(const Rational& x) const;

  long n_min_;
  int direction_;
  std::vector<IntervalMap> blocks_;  // ordered by n
};

/// Default window from the action construction.
inline constexpr long kDefaultWindowMin = -8;
inline constexpr long kDefaultWindowMax = 8;

WindowedMap extend_action(const ActionSpec& spec, long n_min = kDefaultWindowMin,
                          long n_max = kDefaultWindowMax);

/// Evaluates a word in `f` and `g` (same syntax as planar words, acting
/// right to left). Throws OrbitEscape when a point leaves the window.
Rational eval_action(const WindowedMap& g, std::string_view word, const Rational& x);

struct ReportItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct FixLemmaReport {
  std::vector<ReportItem> items;
  bool passed() const;
  std::string str() const;
};

/// (i) Fix(g) contains every window translate of x0 and f(x0);
/// (ii) Fix(f) is empty; (iii) f g f^-1 = g^eps block by block.
FixLemmaReport check_fix_lemmas(const ActionSpec& spec, const WindowedMap& g);
FixLemmaReport check_fix_lemmas(const ActionSpec& spec, long n_min = kDefaultWindowMin,
                                long n_max = kDefaultWindowMax);

class CommutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FixWitness {
  FixedSet common;
  std::optional<Rational> point;
};

struct WindowFixWitness {
  std::vector<Interval> common;
  std::optional<Rational> point;
  bool whole_domain = false;
};

/// Common fixed set of pairwise commuting lifts; throws CommutationError.
FixWitness abelian_fix_witness(std::span<const PLLift> maps);
/// Same for windowed maps sharing one domain. Commutation is checked exactly
/// at every breakpoint of both compositions.
WindowFixWitness abelian_fix_witness(std::span<const WindowedMap> maps);
/// x-fibers fixed pointwise by every map, for commuting fiber translations
/// (x, y) -> (x, y + tau(x)).
FixWitness common_fixed_fibers(std::span<const SkewMap> maps);

// ----------------------------------------------------------------------
// Serialization:
//
//   plaction v1
//   group: Z2|K
//   dir: +1|-1
//   x0: p/q
//   piece x=.. v=.. s=..      (seed pieces on the interval joining x0, x0+dir)

ActionSpec read_action(std::istream& in);
ActionSpec read_action(const std::string& text);
std::string write_action(const ActionSpec& spec);

}  // namespace plh
