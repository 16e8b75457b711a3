#include "plh/circle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace plh {

namespace {

const Rational kHalf(1, 2);

Rational ceil(const Rational& r) { return -(-r).floor(); }

// Nearest point of 2^-64 Z below (or above) r.
Rational round_to_grid(const Rational& r, bool up) {
  static const Rational kScale = Rational::parse("18446744073709551616");
  const Rational scaled = r * kScale;
  return (up ? ceil(scaled) : scaled.floor()) / kScale;
}

PLLift normalized(const PLLift& f) {
  const Rational k = f(Rational(0)).floor();
  if (k.is_zero()) return f;
  return compose(PLLift::translation(-k), f);
}

// min and max over a period, attained at breakpoints
std::pair<Rational, Rational> range(const PLFunc& tau) {
  Rational lo = tau.pieces().front().v;
  Rational hi = lo;
  for (const auto& p : tau.pieces()) {
    lo = min(lo, p.v);
    hi = max(hi, p.v);
  }
  return {lo, hi};
}

// Intervals [a_lo, a_hi] and [b_lo, b_hi] meet after an integer shift.
bool meet_mod_one(const Rational& a_lo, const Rational& a_hi, const Rational& b_lo,
                  const Rational& b_hi) {
  return ceil(a_lo - b_hi) <= (a_hi - b_lo).floor();
}

void check_half_map(const std::vector<Piece>& half) {
  if (half.empty() || half.front().x != Rational(0) || half.front().v != Rational(0)) {
    throw std::invalid_argument("half-period map must fix 0");
  }
  const Piece& last = half.back();
  if (last.x >= kHalf || last.v + last.s * (kHalf - last.x) != kHalf) {
    throw std::invalid_argument("half-period map must fix 1/2");
  }
}

}  // namespace

CircleMap::CircleMap(const PLLift& lift) : lift_(normalized(lift)) {}

CircleMap compose(const CircleMap& f, const CircleMap& g) { return CircleMap(compose(f.lift(), g.lift())); }
CircleMap inverse(const CircleMap& f) { return CircleMap(inverse(f.lift())); }
CircleMap power(const CircleMap& f, long n) { return CircleMap(power(f.lift(), n)); }

bool RotationResult::contains(const Rational& r) const {
  if (kind == Kind::exact) return (r - value).is_integer();
  return meet_mod_one(r, r, lower, upper);
}

std::string RotationResult::str() const {
  if (kind == Kind::exact) return "exact " + value.str();
  return "bracket [" + lower.str() + ", " + upper.str() + "]";
}

RotationResult rotation_number(const CircleMap& m, const RotationOptions& opts) {
  if (opts.q_max < 1) throw std::invalid_argument("q_max must be at least 1");
  if (opts.width.sign() <= 0) throw std::invalid_argument("width must be positive");
  const PLLift& f = m.lift();

  RotationResult res;
  PLLift fq = PLLift::identity();
  for (long q = 1; q <= opts.q_max; ++q) {
    fq = compose(f, fq);
    const auto [lo, hi] = range(displacement(fq));
    for (Rational p = ceil(lo); p <= hi; p += Rational(1)) {
      const FixedSet fix = fixed_set(compose(PLLift::translation(-p), fq));
      if (fix.is_empty()) continue;
      res.kind = RotationResult::Kind::exact;
      res.value = (p / Rational(q)).frac();
      res.period = q;
      res.witness = *fix.first_point();
      return res;
    }
  }

  res.kind = RotationResult::Kind::bracket;
  // Exact orbits grow in size every step, so follow two orbits of 0 rounded
  // down and up to a fixed dyadic grid. By monotonicity they enclose the
  // true orbit: lo_x <= F^n(0) <= hi_x.
  Rational lo_x, hi_x;
  Rational lo(-1), hi(2);
  long n = 0;
  while (hi - lo > opts.width && n < opts.budget) {
    ++n;
    lo_x = round_to_grid(f(lo_x), false);
    hi_x = round_to_grid(f(hi_x), true);
    lo = max(lo, (lo_x - Rational(1)) / Rational(n));
    hi = min(hi, (hi_x + Rational(1)) / Rational(n));
  }
  const Rational k = lo.floor();
  res.lower = lo - k;
  res.upper = hi - k;
  res.width_met = hi - lo <= opts.width;
  res.iterations = n;
  return res;
}

FixedSet circle_fix(const CircleMap& m) {
  const PLLift& f = m.lift();
  const auto [lo, hi] = range(displacement(f));
  FixedSet out;
  for (Rational p = ceil(lo); p <= hi; p += Rational(1)) {
    out = out.unite(fixed_set(compose(PLLift::translation(-p), f)));
  }
  return out;
}

bool power_rotation_check(const CircleMap& m, long n, const RotationOptions& opts) {
  if (n == 0) throw std::invalid_argument("power must be non-zero");
  const RotationResult base = rotation_number(m, opts);
  const RotationResult pow = rotation_number(power(m, n), opts);
  const Rational nn(n);
  auto scaled = [&]() -> std::pair<Rational, Rational> {
    if (base.kind == RotationResult::Kind::exact) return {nn * base.value, nn * base.value};
    const Rational a = nn * base.lower;
    const Rational b = nn * base.upper;
    return {min(a, b), max(a, b)};
  }();
  const auto other = pow.kind == RotationResult::Kind::exact ? std::pair{pow.value, pow.value}
                                                              : std::pair{pow.lower, pow.upper};
  return meet_mod_one(scaled.first, scaled.second, other.first, other.second);
}

// ----------------------------------------------------------------------

KleinPair klein_circle_pair(const std::vector<Piece>& half) {
  check_half_map(half);
  return {CircleMap::rotation(kHalf), CircleMap(half_shift_extension(half))};
}

KleinPair symmetric_klein_pair(const std::vector<Piece>& half) {
  check_half_map(half);
  std::vector<Piece> pieces = half;
  for (const auto& p : half) pieces.push_back({p.x + kHalf, p.v + kHalf, p.s});
  return {CircleMap(PLLift::from_pieces(std::move(pieces))), CircleMap::rotation(kHalf)};
}

bool klein_relation_holds(const CircleMap& f, const CircleMap& g) {
  return compose(f, compose(g, inverse(f))) == inverse(g);
}

bool ContainmentReport::passed() const {
  return relation_holds && containment &&
         std::all_of(arcs.begin(), arcs.end(), [](const ArcReport& a) { return a.infinite; });
}

std::string ContainmentReport::str() const {
  std::ostringstream os;
  os << "relation " << (relation_holds ? "holds" : "FAILS") << "; Fix(f) = " << fix_f.str()
     << "; Fix(g^2) = " << fix_g2.str() << "; containment " << (containment ? "holds" : "FAILS");
  for (const auto& a : arcs) {
    os << "; arc (" << a.from << ", " << a.to << "): " << (a.infinite ? "infinite" : "finite")
       << " Fix(g^2)";
  }
  return os.str();
}

ContainmentReport klein_fix_containment(const CircleMap& f, const CircleMap& g) {
  ContainmentReport r;
  r.fix_f = circle_fix(f);
  if (r.fix_f.is_empty()) throw std::invalid_argument("Fix(f) is empty");
  r.relation_holds = klein_relation_holds(f, g);
  r.fix_g2 = circle_fix(compose(g, g));
  r.containment = r.fix_f.subset_of(r.fix_g2);
  if (r.fix_f.is_full()) return r;

  const auto& items = r.fix_f.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    ArcReport arc;
    arc.from = items[i].hi;
    arc.to = i + 1 < items.size() ? items[i + 1].lo : items.front().lo + Rational(1);
    if (arc.from >= arc.to) continue;
    if (r.fix_g2.is_full()) {
      arc.fix_g2.push_back({arc.from, arc.to});
    } else {
      for (int shift = 0; shift <= 1; ++shift) {
        for (const auto& it : r.fix_g2.items()) {
          Rational lo = max(it.lo + Rational(shift), arc.from);
          Rational hi = min(it.hi + Rational(shift), arc.to);
          if (lo <= hi) arc.fix_g2.push_back({std::move(lo), std::move(hi)});
        }
      }
    }
    arc.infinite = std::any_of(arc.fix_g2.begin(), arc.fix_g2.end(),
                               [](const Interval& it) { return !it.is_point(); });
    r.arcs.push_back(std::move(arc));
  }
  return r;
}

}  // namespace plh
