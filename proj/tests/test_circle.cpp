#include <doctest.h>

#include "plh/circle.hpp"
#include "plh/skew.hpp"
#include "support.hpp"

using plh::CircleMap;
using plh::FixedSet;
using plh::Piece;
using plh::PLLift;
using plh::Rational;
using plh::RotationResult;
namespace t = plh::testing;

namespace {

const std::vector<Piece> kHalfSeed{{Rational(0), Rational(0), Rational(1, 2)},
                                   {Rational(1, 4), Rational(1, 8), Rational(3, 2)}};

}  // namespace

TEST_SUITE("circle") {

TEST_CASE("normalized lift") {
  const CircleMap m(PLLift::translation(Rational(17, 5)));
  CHECK(m.lift() == PLLift::translation(Rational(2, 5)));
  CHECK(m(Rational(4, 5)) == Rational(1, 5));
  CHECK(plh::compose(m, plh::inverse(m)) == CircleMap::identity());
  CHECK(plh::power(m, 5) == CircleMap::identity());
}

TEST_CASE("rotation numbers of simple maps") {
  const auto r = plh::rotation_number(CircleMap::rotation(Rational(5, 12)));
  CHECK(r.kind == RotationResult::Kind::exact);
  CHECK(r.value == Rational(5, 12));
  CHECK(r.period == 12);
  CHECK(r.str() == "exact 5/12");
  CHECK(plh::rotation_number(CircleMap::rotation(Rational(-1, 3))).value == Rational(2, 3));
  const auto d = plh::rotation_number(CircleMap(plh::delta0()));
  CHECK(d.value == 0);
  CHECK(d.period == 1);
  CHECK(d.witness == 0);
  CHECK_THROWS_AS(plh::rotation_number(CircleMap::identity(), {0}), std::invalid_argument);
}

TEST_CASE("periods beyond q_max give a bracket containing the rotation number") {
  plh::RotationOptions opts;
  opts.q_max = 10;
  const auto r = plh::rotation_number(CircleMap::rotation(Rational(7, 29)), opts);
  REQUIRE(r.kind == RotationResult::Kind::bracket);
  CHECK(r.width_met);
  CHECK(r.upper - r.lower <= opts.width);
  CHECK(r.contains(Rational(7, 29)));
  CHECK(r.contains(Rational(36, 29)));
  CHECK_FALSE(r.contains(Rational(1, 4)));
  opts.budget = 3;
  const auto starved = plh::rotation_number(CircleMap::rotation(Rational(7, 29)), opts);
  CHECK_FALSE(starved.width_met);
  CHECK(starved.iterations == 3);
  CHECK(starved.contains(Rational(7, 29)));
}

TEST_CASE("circle_fix includes fixed points of every lift translate") {
  // F(1/2) = 1/2 + 1 is the only point with integer displacement
  const PLLift f = PLLift::from_pieces({{Rational(0), Rational(3, 4), Rational(3, 2)},
                                        {Rational(1, 2), Rational(3, 2), Rational(1, 2)}});
  const CircleMap m(f);
  CHECK(plh::circle_fix(m) == FixedSet::from_items({{Rational(1, 2), Rational(1, 2)}}));
  CHECK(plh::fixed_set(f) == FixedSet::empty());
  CHECK(plh::circle_fix(CircleMap::rotation(Rational(1, 3))).is_empty());
  CHECK(plh::circle_fix(CircleMap::identity()).is_full());
}

TEST_CASE("power rotation check") {
  CHECK(plh::power_rotation_check(CircleMap::rotation(Rational(2, 7)), 3));
  t::Rng rng(501);
  for (int i = 0; i < 20; ++i) {
    CHECK(plh::power_rotation_check(CircleMap(t::random_generic_lift(rng, 3, 6)), 2));
  }
}

TEST_CASE("Klein pairs") {
  const auto kp = plh::klein_circle_pair(kHalfSeed);
  CHECK(plh::klein_relation_holds(kp.f, kp.g));
  CHECK(plh::rotation_number(kp.g).value == 0);
  CHECK(plh::circle_fix(kp.f).is_empty());
  CHECK_THROWS_AS(plh::klein_fix_containment(kp.f, kp.g), std::invalid_argument);

  const auto sp = plh::symmetric_klein_pair(kHalfSeed);
  CHECK(plh::klein_relation_holds(sp.f, sp.g));
  CHECK(plh::rotation_number(sp.g).value == Rational(1, 2));
  const auto rep = plh::klein_fix_containment(sp.f, sp.g);
  CHECK(rep.passed());
  CHECK(rep.fix_f == FixedSet::from_items({{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1, 2)}}));
  CHECK(rep.fix_g2.is_full());
  CHECK(rep.arcs.size() == 2);

  // f with fixed points and a g violating the relation
  const CircleMap f(PLLift::from_pieces({{Rational(0), Rational(0), Rational(2)},
                                         {Rational(1, 4), Rational(1, 2), Rational(2, 3)}}));
  const auto bad = plh::klein_fix_containment(f, CircleMap::rotation(Rational(1, 3)));
  CHECK_FALSE(bad.relation_holds);
  CHECK_FALSE(bad.containment);
  CHECK_FALSE(bad.passed());

  CHECK_THROWS_AS(plh::klein_circle_pair({{Rational(0), Rational(0), Rational(2)}}), std::invalid_argument);
}

TEST_CASE("invariant: exact 0 iff a fixed point exists") {
  t::Rng rng(502);
  int zero = 0;
  for (const auto& s : t::circle_corpus(rng, 60)) {
    const auto r = plh::rotation_number(s.map);
    const bool exact_zero = r.kind == RotationResult::Kind::exact && r.value.is_zero();
    CHECK(exact_zero == !plh::circle_fix(s.map).is_empty());
    zero += exact_zero ? 1 : 0;
    if (s.known) {
      REQUIRE(r.kind == RotationResult::Kind::exact);
      CHECK(r.value == *s.known);
    }
    if (r.kind == RotationResult::Kind::exact) {
      const PLLift fq = plh::power(s.map.lift(), r.period);
      CHECK((fq(r.witness) - r.witness - r.value * Rational(r.period)).is_integer());
    }
  }
  CHECK(zero > 10);
}

TEST_CASE("invariant: conjugacy invariance") {
  t::Rng rng(503);
  for (const auto& s : t::circle_corpus(rng, 30)) {
    const PLLift h = t::random_generic_lift(rng, 3, 6);
    const CircleMap c(plh::compose(h, plh::compose(s.map.lift(), plh::inverse(h))));
    const auto a = plh::rotation_number(s.map);
    const auto b = plh::rotation_number(c);
    REQUIRE(a.kind == b.kind);
    if (a.kind == RotationResult::Kind::exact) {
      CHECK(a.value == b.value);
      CHECK(a.period == b.period);
    } else {
      CHECK((b.contains(a.lower) || b.contains(a.upper) || a.contains(b.lower)));
    }
  }
}

TEST_CASE("invariant: brackets are nested under refinement") {
  t::Rng rng(504);
  int brackets = 0;
  for (int i = 0; i < 40; ++i) {
    const CircleMap m(t::random_generic_lift(rng, 3, 6));
    plh::RotationOptions opts;
    opts.q_max = 4;
    opts.width = Rational(1, 64);
    const auto coarse = plh::rotation_number(m, opts);
    if (coarse.kind != RotationResult::Kind::bracket) continue;
    ++brackets;
    opts.width = Rational(1, 4096);
    const auto fine = plh::rotation_number(m, opts);
    CHECK(t::nested_mod_one(fine.lower, fine.upper, coarse.lower, coarse.upper));
    opts.q_max = 64;
    const auto later = plh::rotation_number(m, opts);
    if (later.kind == RotationResult::Kind::exact) CHECK(coarse.contains(later.value));
  }
  CHECK(brackets > 10);
}

}  // TEST_SUITE
