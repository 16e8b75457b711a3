#include <doctest.h>

#include "plh/plmap_io.hpp"
#include "plh/skew.hpp"
#include "support.hpp"

using plh::ParseError;
using plh::PLLift;
using plh::Rational;
namespace t = plh::testing;

TEST_SUITE("plmap_io") {

TEST_CASE("read with comments and blank lines") {
  const std::string text =
      "# delta0\n"
      "plmap v1 lift\n"
      "\n"
      "piece x=0 v=0 s=1/2\n"
      "piece x=1/3 v=1/6 s=2\n"
      "  # middle\n"
      "piece x=2/3 v=5/6 s=1/2\n";
  const auto m = plh::read_plmap(text);
  REQUIRE(std::holds_alternative<PLLift>(m));
  CHECK(std::get<PLLift>(m) == plh::delta0());
}

TEST_CASE("write is canonical and byte-stable") {
  const std::string out = plh::write_plmap(plh::gamma0());
  CHECK(out == "plmap v1 fn\npiece x=0 v=1 s=-4\npiece x=1/2 v=-1 s=4\n");
  CHECK(plh::write_plmap(plh::read_plmap(out)) == out);
}

TEST_CASE("parse errors carry the line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      plh::read_plmap(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  CHECK(line_of("") == 0);
  CHECK(line_of("plmap v2 lift\n") == 1);
  CHECK(line_of("\n#c\nplmap v1 lift\npiece x=0 v=0\n") == 4);
  CHECK(line_of("plmap v1 lift\npiece x=0 v=0 s=1\npiece x=1/2 v=1/2 z=1\n") == 3);
  CHECK(line_of("plmap v1 lift\npiece x=0 v=0 s=1/0\n") == 2);
  CHECK(line_of("plmap v1 lift\npiece x=0 v=0 s=1 extra\n") == 2);
  CHECK(line_of("plmap v1 lift\nknot x=0 v=0 s=1\n") == 2);
  // Structurally valid lines that fail validation are not tied to a line.
  CHECK(line_of("plmap v1 lift\npiece x=0 v=0 s=2\n") == 0);
}

TEST_CASE("fixed set format") {
  CHECK(plh::write_fixed_set(plh::fixed_set(plh::delta0())) == "fixset v1\npoint 0\npoint 1/2\n");
  CHECK(plh::write_fixed_set(plh::FixedSet::full()) == "fixset v1\nfull\n");
  CHECK(plh::write_fixed_set(plh::FixedSet::empty()) == "fixset v1\nempty\n");
  const auto s = plh::FixedSet::from_items({{Rational(1, 4), Rational(1, 3)}});
  CHECK(plh::write_fixed_set(s) == "fixset v1\ninterval 1/4 1/3\n");
}

TEST_CASE("round trip on random maps") {
  t::Rng rng(201);
  for (int i = 0; i < 200; ++i) {
    const PLLift f = t::random_generic_lift(rng, 6, 20);
    CHECK(std::get<PLLift>(plh::read_plmap(plh::write_plmap(f))) == f);
    const plh::PLFunc g = t::random_func(rng, 6, 20);
    CHECK(std::get<plh::PLFunc>(plh::read_plmap(plh::write_plmap(g))) == g);
  }
}

}  // TEST_SUITE
