#include "plh/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

#include "plh/actions.hpp"
#include "plh/circle.hpp"
#include "plh/skew.hpp"
#include "plh/word.hpp"

namespace plh {

namespace {

struct Outcome {
  bool pass = true;
  std::string witness;
  std::string expected;
  std::vector<std::string> notes;

  // Records a sub-item; the check passes only if every sub-item does.
  void item(bool ok, std::string text) {
    pass = pass && ok;
    notes.push_back((ok ? "ok: " : "FAILED: ") + std::move(text));
  }
};

SkewMap gen(Symbol s) { return generator(s); }

SkewMap conj(const SkewMap& by, const SkewMap& m) { return compose(by, compose(m, inverse(by))); }

std::string joined(const std::vector<std::string>& parts, const char* sep = "; ") {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

// ---------------------------------------------------------------- C1..C3

Outcome gamma0_halfshift() {
  Outcome o;
  const PLFunc lhs = shift(gamma0(), Rational(-1, 2));
  const PLFunc rhs = -gamma0();
  o.witness = "gamma0(x+1/2) = " + pieces_str(lhs.pieces());
  o.expected = "-gamma0(x) = " + pieces_str(rhs.pieces());
  o.item(lhs == rhs, "gamma0(x+1/2) = -gamma0(x)");
  o.item(shift(gamma0(), Rational(-1, 4)) != rhs, "negative control: quarter shift differs from -gamma0");
  return o;
}

Outcome delta0_halfshift() {
  Outcome o;
  const PLLift d = delta0();
  const PLLift half = PLLift::translation(Rational(1, 2));
  const PLLift lhs = compose(d, half);
  const PLLift rhs = compose(half, inverse(d));
  o.witness = "delta0(x+1/2) = " + pieces_str(lhs.pieces());
  o.expected = "delta0^-1(x)+1/2 = " + pieces_str(rhs.pieces());
  o.item(lhs == rhs, "delta0(x+1/2) = delta0^-1(x) + 1/2");
  o.item(compose(d, PLLift::translation(1)) == compose(PLLift::translation(1), d),
         "delta0 commutes with x+1");
  const PLLift skewed = PLLift::from_pieces({{0, 0, {1, 3}}, {{1, 2}, {1, 6}, {5, 3}}});
  o.item(compose(skewed, half) != compose(half, inverse(skewed)),
         "negative control: a non-symmetric lift fails the half-shift relation");
  return o;
}

// Paper's three-piece table of delta0^2 on [0,1/2).
std::vector<Piece> delta0_squared_table() {
  return {{0, 0, {1, 4}}, {{4, 12}, {1, 12}, 1}, {{5, 12}, {1, 6}, 4}};
}

Outcome delta0_squared() {
  Outcome o;
  const PLLift sq = compose(delta0(), delta0());
  std::vector<Piece> restricted;
  for (const auto& p : sq.pieces()) {
    if (p.x < Rational(1, 2)) restricted.push_back(p);
  }
  const auto table = delta0_squared_table();
  o.witness = "delta0^2 on [0,1/2) = " + pieces_str(restricted);
  o.expected = pieces_str(table);
  o.item(restricted == table, "pieces of delta0^2 on [0,1/2) match x/4, x-1/4, 4x-3/2");
  o.item(sq == half_shift_extension(table), "delta0^2 is the half-shift extension of the table");
  return o;
}

// ---------------------------------------------------------------- C4..C9

Outcome displacement_bound() {
  Outcome o;
  const std::pair<Symbol, Rational> expected[] = {
      {Symbol::alpha, {1, 12}}, {Symbol::beta, {1, 12}},      {Symbol::gamma, {1, 168}},
      {Symbol::delta, {1, 6}},  {Symbol::gamma_bar, {1, 168}}, {Symbol::delta_bar, {1, 6}},
  };
  std::vector<std::string> got, want;
  for (const auto& [s, value] : expected) {
    const Rational d = sup_displacement(gen(s));
    const std::string name(symbol_name(s));
    got.push_back(name + "=" + d.str());
    want.push_back(name + "=" + value.str());
    o.item(d == value && d <= Rational(1, 3), name + " sup displacement " + d.str() + " <= 1/3");
  }
  o.witness = joined(got, " ");
  o.expected = joined(want, " ");
  return o;
}

Outcome beta_central() {
  Outcome o;
  const SkewMap beta = gen(Symbol::beta);
  for (Symbol s : {Symbol::alpha, Symbol::gamma, Symbol::delta}) {
    const SkewMap m = gen(s);
    o.item(skew_equal(compose(beta, m), compose(m, beta)),
           "b " + std::string(symbol_name(s)) + " = " + std::string(symbol_name(s)) + " b");
  }
  const SkewMap alpha = gen(Symbol::alpha);
  const SkewMap gamma = gen(Symbol::gamma);
  o.item(!skew_equal(compose(alpha, gamma), compose(gamma, alpha)), "negative control: a g != g a");
  o.witness = o.pass ? "beta commutes with alpha, gamma, delta" : joined(o.notes);
  o.expected = "beta commutes with alpha, gamma, delta";
  return o;
}

Outcome alpha6_conjugation(Symbol s) {
  Outcome o;
  const SkewMap m = gen(s);
  const SkewMap lhs = conj(power(gen(Symbol::alpha), 6), m);
  const SkewMap rhs = inverse(m);
  const std::string n(symbol_name(s));
  o.witness = "a^6 " + n + " a^-6 = " + describe(lhs);
  o.expected = n + "^-1 = " + describe(rhs);
  o.item(skew_equal(lhs, rhs), "a^6 " + n + " a^-6 = " + n + "^-1");
  o.item(skew_equal(conj(power(gen(Symbol::alpha), 12), m), m), "a^12 commutes with " + n);
  o.item(!skew_equal(conj(power(gen(Symbol::alpha), 5), m), rhs),
         "negative control: a^5 " + n + " a^-5 != " + n + "^-1");
  return o;
}

Outcome gk_commute() {
  Outcome o;
  std::vector<SkewMap> g;
  for (long k = 0; k < 12; ++k) g.push_back(make_g(k));
  int pairs = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      ++pairs;
      if (!skew_equal(compose(g[i], g[j]), compose(g[j], g[i]))) {
        o.item(false, "g_" + std::to_string(i) + " and g_" + std::to_string(j) + " do not commute");
      }
    }
  }
  o.item(!skew_equal(compose(g[0], gen(Symbol::delta)), compose(gen(Symbol::delta), g[0])),
         "negative control: g_0 does not commute with d");
  o.witness = std::to_string(pairs) + " pairs commute";
  o.expected = "66 pairs commute";
  o.pass = o.pass && pairs == 66;
  return o;
}

Outcome gk_period() {
  Outcome o;
  int equal = 0;
  for (long k = 0; k < 12; ++k) {
    if (make_g(k) == make_g(k + 12)) {
      ++equal;
    } else {
      o.item(false, "g_" + std::to_string(k) + " != g_" + std::to_string(k + 12));
    }
  }
  o.item(make_g(-1) == make_g(11), "g_-1 = g_11");
  o.item(make_g(0) != make_g(6), "negative control: g_0 != g_6");
  o.witness = std::to_string(equal) + "/12 identities g_k = g_{k+12}";
  o.expected = "12/12 identities g_k = g_{k+12}";
  return o;
}

// ---------------------------------------------------------------- C10..C13

Outcome phi_constant() {
  Outcome o;
  const PLFunc f = phi();
  o.witness = "phi = " + pieces_str(f.pieces());
  o.expected = "phi = " + pieces_str(PLFunc::constant(7).pieces());
  o.item(f == PLFunc::constant(7), "phi is the single-piece constant 7");
  o.item(shift(f, Rational(1, 12)) == f, "phi is 1/12-periodic");
  o.item(f(0) == Rational(7), "phi(0) = 7");
  return o;
}

std::string slope_sum(const std::map<Rational, int>& counts) {
  std::vector<std::string> parts;
  for (const auto& [slope, n] : counts) parts.push_back(n == 1 ? slope.str() : std::to_string(n) + "*" + slope.str());
  return joined(parts, " + ");
}

Outcome phi_derivative() {
  Outcome o;
  const PLLift d2 = compose(delta0(), delta0());
  const PLFunc g0 = gamma0();
  const Rational x(1, 24);  // any point of (0, 1/12)
  std::map<Rational, std::map<Rational, int>> groups;  // gamma0' -> (delta0^2)' multiset
  Rational total;
  for (long k = 0; k < 12; ++k) {
    const Rational xk = x - Rational(k, 12);
    const Rational outer = g0.slope_at(d2(xk));
    const Rational inner = d2.slope_at(xk);
    ++groups[outer][inner];
    total += outer * inner;
    // summand breakpoints sit on multiples of 1/12, so x is generic
    const PLFunc summand = compose(g0, compose(d2, PLLift::translation(Rational(-k, 12))));
    for (const auto& p : summand.pieces()) {
      if (Rational(0) < p.x && p.x < Rational(1, 12)) o.item(false, "summand has a breakpoint inside (0,1/12)");
    }
  }
  std::vector<std::string> terms;
  for (const auto& [outer, counts] : groups) terms.push_back(outer.str() + "(" + slope_sum(counts) + ")");
  o.witness = joined(terms, " + ") + " = " + total.str();
  o.expected = "-4(4*1/4 + 1 + 4) + 4(4*1/4 + 1 + 4) = 0";
  o.item(o.witness == o.expected, "slope bookkeeping on (0,1/12)");
  o.item(phi().slope_at(x).is_zero(), "phi' = 0 on (0,1/12)");
  return o;
}

Outcome key_relation() {
  Outcome o;
  const SkewMap p1 = product_g(1);
  const SkewMap p2 = product_g(2);
  o.witness = describe(p1) + "; " + describe(p2);
  o.expected = "b^{1/24}; b^{1/12}";
  o.item(skew_equal(p1, family_b({1, 24})), "prod_{k=0}^{11} g_k = b^{1/24}");
  o.item(skew_equal(p2, gen(Symbol::beta)), "prod_{k=0}^{11} g_k^2 = beta");
  SkewMap partial = SkewMap::identity();
  for (long k = 0; k < 11; ++k) partial = compose(partial, make_g(k));
  o.item(!partial.as_translation(), "negative control: 11 factors give no translation");
  return o;
}

Outcome eta_swap() {
  Outcome o;
  const SkewMap alpha = gen(Symbol::alpha);
  const SkewMap beta = gen(Symbol::beta);
  o.item(skew_equal(mirror(alpha), beta), "e a e = b via mirror");
  const auto reduced = word_reduce(parse_planar_word("e a e"));
  o.item(std::holds_alternative<SkewMap>(reduced) && skew_equal(std::get<SkewMap>(reduced), beta),
         "word 'e a e' reduces to b");
  o.item(skew_equal(mirror(beta), alpha), "e b e = a");
  o.item(gen(Symbol::gamma_bar) == mirror(gen(Symbol::gamma)), "gb = e g e");
  o.item(gen(Symbol::delta_bar) == mirror(gen(Symbol::delta)), "db = e d e");
  const Point samples[] = {{0, 0}, {{1, 3}, {-2, 7}}, {{5, 11}, {13, 17}}, {{-7, 5}, {1, 9}}};
  bool pointwise = true;
  for (const auto& p : samples) {
    pointwise = pointwise && word_eval(parse_planar_word("e g e"), p) == gen(Symbol::gamma_bar)(p) &&
                word_eval(parse_planar_word("e d e"), p) == gen(Symbol::delta_bar)(p);
  }
  o.item(pointwise, "e g e and e d e agree with gb, db pointwise");
  o.item(!skew_equal(mirror(alpha), alpha), "negative control: e a e != a");
  o.witness = "e a e = " + describe(mirror(alpha));
  o.expected = "e a e = " + describe(beta);
  return o;
}

// ---------------------------------------------------------------- C14..C16

std::vector<ActionSpec> line_seeds() {
  return {
      ActionSpec(ActionGroup::klein, 1, 0,
                 IntervalMap::from_pieces(0, 1, {{0, 0, {1, 2}}, {{1, 2}, {1, 4}, {3, 2}}})),
      ActionSpec(ActionGroup::z2, -1, {1, 3},
                 IntervalMap::from_pieces({-2, 3}, {1, 3},
                                          {{{-2, 3}, {-2, 3}, 2}, {{-1, 2}, {-1, 3}, {1, 2}}, {{1, 6}, 0, 2}})),
      ActionSpec(ActionGroup::klein, -1, {-5, 7},
                 IntervalMap::from_pieces({-12, 7}, {-5, 7},
                                          {{{-12, 7}, {-12, 7}, {3, 4}}, {{-8, 7}, {-9, 7}, {4, 3}}})),
  };
}

Outcome klein_line() {
  Outcome o;
  int passed = 0;
  const auto seeds = line_seeds();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto& spec = seeds[i];
    const std::string tag = "seed " + std::to_string(i + 1) + (spec.epsilon() == 1 ? " (Z2)" : " (K)");
    const WindowedMap g = extend_action(spec, -8, 8);
    const FixLemmaReport report = check_fix_lemmas(spec, g);
    o.item(report.passed(), tag + ": fixed-point lemmas and relation on [-8,8]");
    const WindowedMap other = extend_action(spec, -3, 12);
    bool agree = true;
    for (long n = -3; n <= 8; ++n) agree = agree && g.block(n) == other.block(n);
    o.item(agree, tag + ": windows [-8,8] and [-3,12] agree on the overlap");
    // h^2 is neither h nor h^-1 for a non-trivial seed
    const WindowedMap corrupted = g.with_block(2, compose(g.block(2), g.block(2)));
    const bool caught = !check_fix_lemmas(spec, corrupted).passed();
    o.item(caught, tag + ": negative control, corrupted block 2 is detected");
    if (report.passed() && agree && caught) ++passed;
  }
  o.witness = std::to_string(passed) + "/3 seeds";
  o.expected = "3/3 seeds";
  return o;
}

std::vector<std::vector<Piece>> circle_seeds() {
  return {
      {{0, 0, {1, 2}}, {{1, 4}, {1, 8}, {3, 2}}},
      {{0, 0, 2}, {{1, 8}, {1, 4}, {1, 2}}, {{3, 8}, {3, 8}, 1}},
      {{0, 0, 1}},
  };
}

Outcome klein_circle() {
  Outcome o;
  std::vector<std::string> rots;
  for (const auto& seed : circle_seeds()) {
    const KleinPair kp = klein_circle_pair(seed);
    const RotationResult r = rotation_number(kp.g);
    rots.push_back(r.str());
    o.item(klein_relation_holds(kp.f, kp.g), "f g f^-1 = g^-1 for seed " + pieces_str(seed));
    o.item(r.kind == RotationResult::Kind::exact && (r.value.is_zero() || r.value == Rational(1, 2)),
           "rot(g) = " + r.value.str());
  }
  const KleinPair sym = symmetric_klein_pair(circle_seeds()[0]);
  const RotationResult rs = rotation_number(sym.g);
  rots.push_back(rs.str());
  o.item(rs.kind == RotationResult::Kind::exact && rs.value == Rational(1, 2), "symmetric pair: rot(g) = 1/2");
  const ContainmentReport rep = klein_fix_containment(sym.f, sym.g);
  o.item(rep.passed(), "symmetric pair: " + rep.str());
  const ContainmentReport trivial = klein_fix_containment(sym.f, CircleMap::identity());
  o.item(trivial.passed(), "g = id: containment holds");
  const CircleMap bad_f(PLLift::from_pieces({{0, 0, 2}, {{1, 4}, {1, 2}, {2, 3}}}));
  const ContainmentReport neg = klein_fix_containment(bad_f, CircleMap::rotation({1, 3}));
  o.item(!neg.relation_holds && !neg.containment, "negative control: non-Klein pair fails");
  o.witness = "rot(g): " + joined(rots, ", ") + "; Fix(f) = " + rep.fix_f.str() + " in Fix(g^2) = " + rep.fix_g2.str();
  o.expected = "rot(g): exact 0, exact 0, exact 0, exact 1/2; Fix(f) = {0, 1/2} in Fix(g^2) = full";
  o.pass = o.pass && o.witness == o.expected;
  return o;
}

Outcome halfparam_roots() {
  Outcome o;
  o.item(power(family_a({1, 24}), 2) == gen(Symbol::alpha), "(a^{1/24})^2 = alpha");
  o.item(power(family_b({1, 24}), 2) == gen(Symbol::beta), "(b^{1/24})^2 = beta");
  o.item(power(family_c({1, 336}), 2) == gen(Symbol::gamma), "(c^{1/336})^2 = gamma");
  o.item(power(mirror(family_c({1, 336})), 2) == gen(Symbol::gamma_bar), "(e c^{1/336} e)^2 = gb");
  o.witness = describe(power(family_a({1, 24}), 2)) + ", " + describe(power(family_b({1, 24}), 2)) + ", " +
              describe(power(family_c({1, 336}), 2));
  o.expected = "a^{1/12}, b^{1/12}, c^{1/168}";
  o.notes.push_back("no closed-form root of delta is constructed");
  return o;
}

struct Entry {
  CheckInfo info;
  std::function<Outcome()> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {{"C1", "gamma0-halfshift", "gamma0(x+1/2) = -gamma0(x)"}, gamma0_halfshift},
      {{"C2", "delta0-halfshift", "delta0(x+1/2) = delta0^-1(x) + 1/2"}, delta0_halfshift},
      {{"C3", "delta0-squared", "delta0^2 matches its three-piece table on [0,1/2)"}, delta0_squared},
      {{"C4", "displacement", "every generator displaces points by at most 1/3"}, displacement_bound},
      {{"C5", "beta-central", "beta commutes with alpha, gamma, delta"}, beta_central},
      {{"C6", "alpha6-gamma", "a^6 g a^-6 = g^-1"}, [] { return alpha6_conjugation(Symbol::gamma); }},
      {{"C7", "alpha6-delta", "a^6 d a^-6 = d^-1"}, [] { return alpha6_conjugation(Symbol::delta); }},
      {{"C8", "gk-commute", "g_0..g_11 pairwise commute"}, gk_commute},
      {{"C9", "gk-period", "g_k = g_{k+12}"}, gk_period},
      {{"C10", "phi-constant", "phi is the constant 7 and 1/12-periodic"}, phi_constant},
      {{"C11", "phi-derivative", "slope bookkeeping of phi on (0,1/12) sums to 0"}, phi_derivative},
      {{"C12", "key-relation", "prod g_k = b^{1/24}, prod g_k^2 = beta"}, key_relation},
      {{"C13", "eta-swap", "e a e = b; gb, db are mirrors"}, eta_swap},
      {{"C14", "klein-line", "Z2 and K actions on the line from seeds"}, klein_line},
      {{"C15", "klein-circle", "K actions on the circle: rotation numbers and fixed sets"}, klein_circle},
      {{"C16", "halfparam-roots", "half-parameter square roots of a, b, c generators"}, halfparam_roots},
  };
  return e;
}

CheckResult run_entry(const Entry& e) {
  CheckResult r;
  r.id = e.info.id;
  r.name = e.info.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = e.run();
    r.status = o.pass ? CheckStatus::pass : CheckStatus::fail;
    r.witness = std::move(o.witness);
    r.expected = std::move(o.expected);
    r.notes = std::move(o.notes);
  } catch (const std::exception& ex) {
    r.status = CheckStatus::error;
    r.witness = std::string("exception: ") + ex.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::error: return "error";
  }
  return "error";
}

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    std::vector<CheckInfo> c;
    for (const auto& e : entries()) c.push_back(e.info);
    return c;
  }();
  return catalog;
}

std::vector<CheckResult> verify_paper(std::span<const std::string> selection) {
  const auto& all = entries();
  std::vector<bool> chosen(all.size(), selection.empty());
  for (const auto& sel : selection) {
    auto it = std::find_if(all.begin(), all.end(),
                           [&](const Entry& e) { return e.info.id == sel || e.info.name == sel; });
    if (it == all.end()) throw UnknownCheck("unknown check id '" + sel + "'");
    chosen[static_cast<std::size_t>(it - all.begin())] = true;
  }
  std::vector<std::future<CheckResult>> pending;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (chosen[i]) pending.push_back(std::async(std::launch::async, run_entry, std::cref(all[i])));
  }
  std::vector<CheckResult> out;
  out.reserve(pending.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::string format_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::string tag(status_name(r.status));
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char c) { return std::toupper(c); });
    os << tag << ' ' << r.id << ' ' << r.name << ": " << r.witness;
    if (r.status != CheckStatus::pass) os << " (expected: " << r.expected << ")";
    os << '\n';
    if (r.status != CheckStatus::pass) {
      for (const auto& n : r.notes) os << "    " << n << '\n';
    }
    if (r.status == CheckStatus::pass) ++passed;
  }
  os << passed << '/' << results.size() << " checks passed\n";
  return os.str();
}

std::string format_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    checks.push_back({
        {"id", r.id},
        {"name", r.name},
        {"status", status_name(r.status)},
        {"witness", r.witness},
        {"expected", r.expected},
        {"notes", r.notes},
        {"elapsed_ms", r.elapsed_ms},
    });
    if (r.status == CheckStatus::pass) ++passed;
  }
  nlohmann::json doc = {{"checks", checks}, {"passed", passed}, {"total", results.size()}};
  return doc.dump(2) + "\n";
}

}  // namespace plh
