#include <doctest.h>

#include "plh/skew.hpp"
#include "support.hpp"

using plh::Axis;
using plh::Point;
using plh::Rational;
using plh::SkewMap;
using plh::Symbol;
namespace t = plh::testing;

namespace {

SkewMap random_skew(t::Rng& rng, Axis axis = Axis::over_x) {
  return {axis, t::random_generic_lift(rng), t::random_func(rng)};
}

Point random_point(t::Rng& rng) {
  return {t::random_rational(rng, -3, 3, 24), t::random_rational(rng, -3, 3, 24)};
}

SkewMap gen(Symbol s) { return plh::generator(s); }

}  // namespace

TEST_SUITE("skew") {

TEST_CASE("generators act as described") {
  const Point p{Rational(1, 3), Rational(2, 5)};
  CHECK(gen(Symbol::alpha)(p) == Point{Rational(5, 12), Rational(2, 5)});
  CHECK(gen(Symbol::beta)(p) == Point{Rational(1, 3), Rational(29, 60)});
  CHECK(gen(Symbol::gamma)(p) == Point{Rational(1, 3), Rational(2, 5) + Rational(-1, 3) / 168});
  CHECK(gen(Symbol::delta)(p) == Point{Rational(1, 6), Rational(2, 5)});
  CHECK(gen(Symbol::delta_bar)(p) == Point{Rational(1, 3), Rational(3, 10)});
  CHECK(gen(Symbol::gamma_bar)(p) == Point{Rational(1, 3) + Rational(-3, 5) / 168, Rational(2, 5)});
  CHECK_THROWS_AS(gen(Symbol::eta), std::invalid_argument);
}

TEST_CASE("named lookup") {
  CHECK(plh::generator("a", Rational(1, 12)) == gen(Symbol::alpha));
  CHECK(plh::generator("c", Rational(1, 168)) == gen(Symbol::gamma));
  CHECK(plh::generator("delta_bar") == gen(Symbol::delta_bar));
  CHECK_THROWS_AS(plh::generator("a"), std::invalid_argument);
  CHECK_THROWS_AS(plh::generator("beta", Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(plh::generator("zeta"), std::invalid_argument);
}

TEST_CASE("describe") {
  CHECK(plh::describe(SkewMap::identity()) == "id");
  CHECK(plh::describe(plh::family_b(Rational(1, 24))) == "b^{1/24}");
  CHECK(plh::describe(plh::family_a(Rational(-1, 12))) == "a^{-1/12}");
  CHECK(plh::describe(plh::family_c(Rational(-1, 168))) == "c^{-1/168}");
  CHECK(plh::describe(SkewMap::translation(1, 2, Axis::over_y)) == "a^{1} b^{2}");
}

TEST_CASE("compose across axes") {
  CHECK_THROWS_AS(plh::compose(gen(Symbol::gamma), gen(Symbol::gamma_bar)), plh::OrientationError);
  CHECK(plh::skew_equal(SkewMap::translation(1, 2, Axis::over_x), SkewMap::translation(1, 2, Axis::over_y)));
  CHECK_FALSE(plh::skew_equal(gen(Symbol::gamma), gen(Symbol::gamma_bar)));
  CHECK(gen(Symbol::gamma).over(Axis::over_y) == std::nullopt);
  CHECK(gen(Symbol::alpha).over(Axis::over_y)->axis() == Axis::over_y);
}

TEST_CASE("listed relations") {
  const SkewMap a = gen(Symbol::alpha), b = gen(Symbol::beta), g = gen(Symbol::gamma), d = gen(Symbol::delta);
  for (const SkewMap& s : {a, g, d}) CHECK(plh::compose(b, s) == plh::compose(s, b));
  const SkewMap a6 = plh::power(a, 6);
  CHECK(plh::compose(a6, plh::compose(g, plh::inverse(a6))) == plh::inverse(g));
  CHECK(plh::compose(a6, plh::compose(d, plh::inverse(a6))) == plh::inverse(d));
  const SkewMap a12 = plh::power(a, 12);
  CHECK(plh::compose(a12, d) == plh::compose(d, a12));
  CHECK(plh::compose(a12, g) == plh::compose(g, a12));
}

TEST_CASE("g_0 is the fiber map t gamma0(delta0^2(x))") {
  const SkewMap g0 = plh::make_g(0);
  CHECK(g0.base().is_identity());
  CHECK(g0.fiber() == plh::gamma_parameter() * plh::compose(plh::gamma0(), plh::power(plh::delta0(), 2)));
  CHECK(plh::make_g(3) == plh::make_g(15));
  CHECK(plh::make_g(-1) == plh::make_g(11));
}

TEST_CASE("key relation and the constant 7") {
  CHECK(plh::product_g(1) == plh::family_b(Rational(1, 24)));
  CHECK(plh::product_g(2) == gen(Symbol::beta));
  CHECK(plh::phi() == plh::PLFunc::constant(7));
}

TEST_CASE("displacement of generators") {
  CHECK(plh::sup_displacement(gen(Symbol::alpha)) == Rational(1, 12));
  CHECK(plh::sup_displacement(gen(Symbol::beta)) == Rational(1, 12));
  CHECK(plh::sup_displacement(gen(Symbol::gamma)) == Rational(1, 168));
  CHECK(plh::sup_displacement(gen(Symbol::delta)) == Rational(1, 6));
  CHECK(plh::sup_displacement(gen(Symbol::gamma_bar)) == Rational(1, 168));
  CHECK(plh::sup_displacement(gen(Symbol::delta_bar)) == Rational(1, 6));
}

TEST_CASE("invariant: composition law is pointwise") {
  t::Rng rng(301);
  for (int i = 0; i < 200; ++i) {
    const Axis axis = i % 2 == 0 ? Axis::over_x : Axis::over_y;
    const SkewMap a = random_skew(rng, axis);
    const SkewMap b = random_skew(rng, axis);
    const SkewMap ab = plh::compose(a, b);
    for (int k = 0; k < 4; ++k) {
      const Point p = random_point(rng);
      CHECK(ab(p) == a(b(p)));
    }
  }
}

TEST_CASE("invariant: inverse is two-sided") {
  t::Rng rng(302);
  for (int i = 0; i < 200; ++i) {
    const SkewMap a = random_skew(rng);
    CHECK(plh::compose(a, plh::inverse(a)) == SkewMap::identity());
    CHECK(plh::compose(plh::inverse(a), a) == SkewMap::identity());
  }
}

TEST_CASE("invariant: mirror is an involutive homomorphism") {
  t::Rng rng(303);
  for (int i = 0; i < 200; ++i) {
    const SkewMap a = random_skew(rng);
    const SkewMap b = random_skew(rng);
    CHECK(plh::mirror(plh::mirror(a)) == a);
    CHECK(plh::mirror(plh::compose(a, b)) == plh::compose(plh::mirror(a), plh::mirror(b)));
    const Point p = random_point(rng);
    const Point q = a({p.y, p.x});
    CHECK(plh::mirror(a)(p) == Point{q.y, q.x});
  }
}

}  // TEST_SUITE
