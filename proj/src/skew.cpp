#include "plh/skew.hpp"

#include <vector>

namespace plh {

SkewMap SkewMap::identity(Axis axis) { return {axis, PLLift::identity(), PLFunc::constant(0)}; }

SkewMap SkewMap::translation(const Rational& dx, const Rational& dy, Axis axis) {
  if (axis == Axis::over_x) return {axis, PLLift::translation(dx), PLFunc::constant(dy)};
  return {axis, PLLift::translation(dy), PLFunc::constant(dx)};
}

Point SkewMap::operator()(const Point& p) const {
  if (axis_ == Axis::over_x) return {base_(p.x), p.y + fiber_(p.x)};
  return {p.x + fiber_(p.y), base_(p.y)};
}

std::optional<std::pair<Rational, Rational>> SkewMap::as_translation() const {
  const auto shift = base_.translation_amount();
  if (!shift || fiber_.pieces().size() != 1 || !fiber_.pieces()[0].s.is_zero()) return std::nullopt;
  const Rational& c = fiber_.pieces()[0].v;
  if (axis_ == Axis::over_x) return std::pair{*shift, c};
  return std::pair{c, *shift};
}

std::optional<SkewMap> SkewMap::over(Axis axis) const {
  if (axis == axis_) return *this;
  const auto t = as_translation();
  if (!t) return std::nullopt;
  return translation(t->first, t->second, axis);
}

SkewMap compose(const SkewMap& a, const SkewMap& b) {
  if (a.axis() != b.axis()) throw OrientationError("composition of maps over different axes");
  return {a.axis(), compose(a.base(), b.base()), b.fiber() + compose(a.fiber(), b.base())};
}

SkewMap inverse(const SkewMap& a) {
  PLLift inv = inverse(a.base());
  PLFunc fib = -compose(a.fiber(), inv);
  return {a.axis(), std::move(inv), std::move(fib)};
}

SkewMap power(const SkewMap& a, long n) {
  SkewMap base = n < 0 ? inverse(a) : a;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  SkewMap result = SkewMap::identity(a.axis());
  while (e != 0) {
    if (e & 1U) result = compose(result, base);
    e >>= 1U;
    if (e != 0) base = compose(base, base);
  }
  return result;
}

bool skew_equal(const SkewMap& a, const SkewMap& b) {
  if (a.axis() == b.axis()) return a == b;
  const auto ta = a.as_translation();
  const auto tb = b.as_translation();
  return ta && tb && *ta == *tb;
}

SkewMap mirror(const SkewMap& a) {
  return {a.axis() == Axis::over_x ? Axis::over_y : Axis::over_x, a.base(), a.fiber()};
}

Rational sup_displacement(const SkewMap& a) {
  return max(sup_displacement(a.base()), sup_abs(a.fiber()));
}

std::string describe(const SkewMap& a) {
  if (const auto t = a.as_translation()) {
    const auto& [dx, dy] = *t;
    if (dx.is_zero() && dy.is_zero()) return "id";
    if (dx.is_zero()) return "b^{" + dy.str() + "}";
    if (dy.is_zero()) return "a^{" + dx.str() + "}";
    return "a^{" + dx.str() + "} b^{" + dy.str() + "}";
  }
  if (a.axis() == Axis::over_x && a.base().is_identity()) {
    const Rational c = a.fiber()(Rational(0));
    if (a.fiber() == c * gamma0()) return "c^{" + c.str() + "}";
  }
  return std::string(a.axis() == Axis::over_x ? "over-x" : "over-y") +
         "{base=" + pieces_str(a.base().pieces()) + ", fiber=" + pieces_str(a.fiber().pieces()) + "}";
}

// ----------------------------------------------------------------------

PLFunc gamma0() {
  return PLFunc::from_pieces({
      {Rational(0), Rational(1), Rational(-4)},
      {Rational(1, 2), Rational(-1), Rational(4)},
  });
}

PLLift delta0() {
  return half_shift_extension({
      {Rational(0), Rational(0), Rational(1, 2)},
      {Rational(1, 3), Rational(1, 6), Rational(2)},
  });
}

SkewMap family_a(const Rational& t) { return SkewMap::translation(t, 0); }
SkewMap family_b(const Rational& t) { return SkewMap::translation(0, t); }
SkewMap family_c(const Rational& t) { return {Axis::over_x, PLLift::identity(), t * gamma0()}; }

Rational gamma_parameter() { return {1, 168}; }

SkewMap generator(Symbol s) {
  switch (s) {
    case Symbol::alpha: return family_a({1, 12});
    case Symbol::beta: return family_b({1, 12});
    case Symbol::gamma: return family_c(gamma_parameter());
    case Symbol::delta: return {Axis::over_x, delta0(), PLFunc::constant(0)};
    case Symbol::gamma_bar: return mirror(generator(Symbol::gamma));
    case Symbol::delta_bar: return mirror(generator(Symbol::delta));
    case Symbol::eta: break;
  }
  throw std::invalid_argument("eta swaps the axes and is not a skew map");
}

SkewMap generator(std::string_view name, const std::optional<Rational>& t) {
  const bool family = name == "a" || name == "b" || name == "c";
  if (family && !t) throw std::invalid_argument("generator '" + std::string(name) + "' needs a parameter");
  if (!family && t) {
    throw std::invalid_argument("generator '" + std::string(name) + "' takes no parameter");
  }
  if (name == "a") return family_a(*t);
  if (name == "b") return family_b(*t);
  if (name == "c") return family_c(*t);
  if (name == "alpha") return generator(Symbol::alpha);
  if (name == "beta") return generator(Symbol::beta);
  if (name == "gamma") return generator(Symbol::gamma);
  if (name == "delta") return generator(Symbol::delta);
  if (name == "gamma_bar") return generator(Symbol::gamma_bar);
  if (name == "delta_bar") return generator(Symbol::delta_bar);
  if (name == "eta") return generator(Symbol::eta);
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

SkewMap make_g(long k) {
  const SkewMap alpha_k = power(generator(Symbol::alpha), k);
  const SkewMap delta2 = power(generator(Symbol::delta), 2);
  const SkewMap inner = compose(inverse(delta2), compose(generator(Symbol::gamma), delta2));
  return compose(alpha_k, compose(inner, inverse(alpha_k)));
}

SkewMap product_g(int exponent) {
  SkewMap result = SkewMap::identity();
  for (long k = 0; k < 12; ++k) result = compose(result, power(make_g(k), exponent));
  return result;
}

PLFunc phi() {
  const PLLift delta2 = power(delta0(), 2);
  const PLFunc g0 = gamma0();
  std::vector<Term> terms;
  for (long k = 0; k < 12; ++k) {
    terms.push_back({Rational(1), compose(g0, compose(delta2, PLLift::translation(Rational(-k, 12))))});
  }
  return linear_combine(terms);
}

}  // namespace plh
