#include "plh/actions.hpp"

#include <algorithm>
#include <sstream>

#include "plh/plmap_io.hpp"
#include "plh/word.hpp"

namespace plh {

namespace {

std::size_t piece_index(const std::vector<Piece>& ps, const Rational& x) {
  auto it = std::upper_bound(ps.begin(), ps.end(), x,
                             [](const Rational& v, const Piece& p) { return v < p.x; });
  return static_cast<std::size_t>(std::distance(ps.begin(), it)) - 1;
}

Rational slope_at(const IntervalMap& m, const Rational& x) {
  // right derivative; at hi use the last piece
  return m.pieces()[piece_index(m.pieces(), x)].s;
}

std::vector<Interval> merge(std::vector<Interval> items) {
  std::sort(items.begin(), items.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (auto& it : items) {
    if (!out.empty() && it.lo <= out.back().hi) {
      out.back().hi = max(out.back().hi, it.hi);
    } else {
      out.push_back(std::move(it));
    }
  }
  return out;
}

std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  std::vector<Interval> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Rational lo = max(x.lo, y.lo);
      Rational hi = min(x.hi, y.hi);
      if (lo <= hi) out.push_back({std::move(lo), std::move(hi)});
    }
  }
  return merge(std::move(out));
}

}  // namespace

// ---------------------------------------------------------------- IntervalMap

IntervalMap IntervalMap::from_pieces(const Rational& lo, const Rational& hi, std::vector<Piece> raw) {
  if (!(lo < hi)) throw PLError("interval map needs lo < hi");
  if (raw.empty()) throw PLError("no pieces");
  std::sort(raw.begin(), raw.end(), [](const Piece& a, const Piece& b) { return a.x < b.x; });
  if (raw.front().x != lo) throw PLError("first breakpoint must be " + lo.str());
  if (raw.front().v != lo) throw PLError("interval map must fix " + lo.str());
  if (raw.back().x >= hi) throw PLError("breakpoint " + raw.back().x.str() + " outside [" + lo.str() + ", " + hi.str() + ")");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i + 1 < raw.size() && raw[i + 1].x == raw[i].x) {
      throw PLError("degenerate piece at breakpoint " + raw[i].x.str());
    }
    if (raw[i].s.sign() <= 0) throw PLError("non-positive slope at " + raw[i].x.str());
    const Rational end = i + 1 < raw.size() ? raw[i + 1].x : hi;
    const Rational end_value = raw[i].v + raw[i].s * (end - raw[i].x);
    const Rational expected = i + 1 < raw.size() ? raw[i + 1].v : hi;
    if (end_value != expected) {
      throw PLError("discontinuity or moved endpoint at " + end.str() + ": " + end_value.str() +
                    " vs " + expected.str());
    }
  }
  IntervalMap m;
  m.lo_ = lo;
  m.hi_ = hi;
  for (auto& p : raw) {
    if (!m.pieces_.empty() && m.pieces_.back().s == p.s) continue;
    m.pieces_.push_back(std::move(p));
  }
  return m;
}

IntervalMap IntervalMap::identity(const Rational& lo, const Rational& hi) {
  return from_pieces(lo, hi, {{lo, lo, Rational(1)}});
}

Rational IntervalMap::operator()(const Rational& x) const {
  const Piece& p = pieces_[piece_index(pieces_, x)];
  return p.v + p.s * (x - p.x);
}

Rational IntervalMap::preimage(const Rational& y) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), y,
                             [](const Rational& v, const Piece& p) { return v < p.v; });
  const Piece& p = *std::prev(it);
  return p.x + (y - p.v) / p.s;
}

IntervalMap inverse(const IntervalMap& m) {
  std::vector<Piece> out;
  out.reserve(m.pieces().size());
  for (const auto& p : m.pieces()) out.push_back({p.v, p.x, Rational(1) / p.s});
  return IntervalMap::from_pieces(m.lo(), m.hi(), std::move(out));
}

IntervalMap compose(const IntervalMap& a, const IntervalMap& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) throw std::invalid_argument("interval maps on different domains");
  std::vector<Rational> cuts;
  for (const auto& p : b.pieces()) cuts.push_back(p.x);
  for (const auto& p : a.pieces()) cuts.push_back(b.preimage(p.x));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Piece> out;
  out.reserve(cuts.size());
  for (const auto& c : cuts) {
    const Rational bc = b(c);
    out.push_back({c, a(bc), slope_at(a, bc) * slope_at(b, c)});
  }
  return IntervalMap::from_pieces(a.lo(), a.hi(), std::move(out));
}

IntervalMap translate(const IntervalMap& m, const Rational& d) {
  std::vector<Piece> out;
  out.reserve(m.pieces().size());
  for (const auto& p : m.pieces()) out.push_back({p.x + d, p.v + d, p.s});
  return IntervalMap::from_pieces(m.lo() + d, m.hi() + d, std::move(out));
}

std::vector<Interval> fixed_points(const IntervalMap& m) {
  const auto& ps = m.pieces();
  std::vector<Interval> items{{m.lo(), m.lo()}, {m.hi(), m.hi()}};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Rational end = i + 1 < ps.size() ? ps[i + 1].x : m.hi();
    if (ps[i].s == Rational(1)) {
      if (ps[i].v == ps[i].x) items.push_back({ps[i].x, end});
      continue;
    }
    const Rational z = (ps[i].v - ps[i].s * ps[i].x) / (Rational(1) - ps[i].s);
    if (ps[i].x <= z && z <= end) items.push_back({z, z});
  }
  return merge(std::move(items));
}

// ---------------------------------------------------------------- ActionSpec

ActionSpec::ActionSpec(ActionGroup group, int direction, Rational x0, IntervalMap seed)
    : group_(group), direction_(direction), x0_(std::move(x0)), seed_(std::move(seed)) {
  if (direction_ != 1 && direction_ != -1) throw std::invalid_argument("direction must be +1 or -1");
  const Rational lo = direction_ == 1 ? x0_ : x0_ - Rational(1);
  if (seed_.lo() != lo || seed_.hi() != lo + Rational(1)) {
    throw std::invalid_argument("seed must live on [" + lo.str() + ", " + (lo + Rational(1)).str() + "]");
  }
}

// ---------------------------------------------------------------- WindowedMap

WindowedMap::WindowedMap(long n_min, int direction, std::vector<IntervalMap> blocks)
    : n_min_(n_min), direction_(direction), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("empty window");
  for (std::size_t i = 0; i + 1 < blocks_.size(); ++i) {
    const auto& a = blocks_[i];
    const auto& b = blocks_[i + 1];
    const bool adjacent = direction_ == 1 ? a.hi() == b.lo() : b.hi() == a.lo();
    if (!adjacent) throw std::invalid_argument("window blocks are not adjacent");
  }
}

const IntervalMap& WindowedMap::block(long n) const {
  if (n < n_min() || n > n_max()) throw OrbitEscape("block " + std::to_string(n) + " outside window");
  return blocks_[static_cast<std::size_t>(n - n_min_)];
}

WindowedMap WindowedMap::with_block(long n, IntervalMap m) const {
  WindowedMap copy = *this;
  const auto& old = block(n);
  if (old.lo() != m.lo() || old.hi() != m.hi()) throw std::invalid_argument("replacement block has another domain");
  copy.blocks_[static_cast<std::size_t>(n - n_min_)] = std::move(m);
  return copy;
}

Interval WindowedMap::domain() const {
  const auto& first = blocks_.front();
  const auto& last = blocks_.back();
  return direction_ == 1 ? Interval{first.lo(), last.hi()} : Interval{last.lo(), first.hi()};
}

const IntervalMap& WindowedMap::block_at(const Rational& x) const {
  for (const auto& b : blocks_) {
    if (b.contains(x)) return b;
  }
  throw OrbitEscape("point " + x.str() + " outside window domain");
}

Rational WindowedMap::apply(const Rational& x) const { return block_at(x)(x); }
Rational WindowedMap::apply_inverse(const Rational& x) const { return block_at(x).preimage(x); }

std::vector<Interval> WindowedMap::fixed_points() const {
  std::vector<Interval> all;
  for (const auto& b : blocks_) {
    auto fp = plh::fixed_points(b);
    all.insert(all.end(), fp.begin(), fp.end());
  }
  return merge(std::move(all));
}

WindowedMap extend_action(const ActionSpec& spec, long n_min, long n_max) {
  if (n_min > n_max) throw std::invalid_argument("empty window");
  const IntervalMap h_inv = inverse(spec.seed());
  std::vector<IntervalMap> blocks;
  blocks.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (long n = n_min; n <= n_max; ++n) {
    const bool inverted = spec.epsilon() == -1 && n % 2 != 0;
    blocks.push_back(translate(inverted ? h_inv : spec.seed(), Rational(n * spec.direction())));
  }
  return WindowedMap(n_min, spec.direction(), std::move(blocks));
}

Rational eval_action(const WindowedMap& g, std::string_view word, const Rational& x) {
  const auto atoms = tokenize_word(word);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].name != "f" && atoms[i].name != "g") {
      throw WordParseError(i + 1, "unknown generator '" + atoms[i].name + "'");
    }
  }
  const Interval dom = g.domain();
  auto check = [&](const Rational& p) {
    if (!dom.contains(p)) throw OrbitEscape("orbit left the window at " + p.str());
  };
  Rational p = x;
  check(p);
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    const long n = it->exponent < 0 ? -it->exponent : it->exponent;
    for (long i = 0; i < n; ++i) {
      if (it->name == "f") {
        p += Rational(it->exponent < 0 ? -g.direction() : g.direction());
      } else {
        p = it->exponent < 0 ? g.apply_inverse(p) : g.apply(p);
      }
      check(p);
    }
  }
  return p;
}

// ---------------------------------------------------------------- checks

bool FixLemmaReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; });
}

std::string FixLemmaReport::str() const {
  std::string out;
  for (const auto& i : items) out += (i.pass ? "PASS " : "FAIL ") + i.name + ": " + i.detail + "\n";
  return out;
}

FixLemmaReport check_fix_lemmas(const ActionSpec& spec, const WindowedMap& g) {
  FixLemmaReport report;
  const Rational dir(spec.direction());

  ReportItem orbit{"fix-g-orbit", true, ""};
  long count = 0;
  for (long n = g.n_min(); n <= g.n_max() + 1; ++n) {
    const Rational p = spec.x0() + Rational(n) * dir;
    ++count;
    if (g.apply(p) != p) {
      orbit.pass = false;
      orbit.detail = "g moves f^" + std::to_string(n) + "(x0) = " + p.str();
      break;
    }
  }
  if (orbit.pass) orbit.detail = std::to_string(count) + " translates of x0 fixed by g";
  report.items.push_back(std::move(orbit));

  const FixedSet fix_f = fixed_set(PLLift::translation(dir));
  report.items.push_back({"fix-f-empty", fix_f.is_empty(), "Fix(f) = " + fix_f.str()});

  ReportItem rel{"relation", true, ""};
  for (long n = g.n_min(); n < g.n_max(); ++n) {
    const IntervalMap lhs = translate(g.block(n), dir);
    const IntervalMap rhs = spec.epsilon() == 1 ? g.block(n + 1) : inverse(g.block(n + 1));
    if (lhs != rhs) {
      rel.pass = false;
      rel.detail = "f g f^-1 differs from g^eps on block " + std::to_string(n + 1);
      break;
    }
  }
  if (rel.pass) {
    rel.detail = std::string("f g f^-1 = g^") + (spec.epsilon() == 1 ? "1" : "-1") + " on " +
                 std::to_string(g.n_max() - g.n_min()) + " block pairs";
  }
  report.items.push_back(std::move(rel));
  return report;
}

FixLemmaReport check_fix_lemmas(const ActionSpec& spec, long n_min, long n_max) {
  return check_fix_lemmas(spec, extend_action(spec, n_min, n_max));
}

FixWitness abelian_fix_witness(std::span<const PLLift> maps) {
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      if (compose(maps[i], maps[j]) != compose(maps[j], maps[i])) {
        throw CommutationError("maps " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
      }
    }
  }
  FixWitness w{FixedSet::full(), std::nullopt};
  for (const auto& m : maps) w.common = w.common.intersect(fixed_set(m));
  w.point = w.common.first_point();
  return w;
}

WindowFixWitness abelian_fix_witness(std::span<const WindowedMap> maps) {
  WindowFixWitness w;
  if (maps.empty()) throw std::invalid_argument("no maps");
  const Interval dom = maps[0].domain();
  for (const auto& m : maps) {
    if (m.domain() != dom) throw std::invalid_argument("windowed maps on different domains");
  }
  auto breakpoints = [](const WindowedMap& m) {
    std::vector<Rational> out;
    for (const auto& b : m.blocks()) {
      for (const auto& p : b.pieces()) out.push_back(p.x);
    }
    return out;
  };
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      const auto& a = maps[i];
      const auto& b = maps[j];
      // a o b and b o a are affine between these points
      std::vector<Rational> pts{dom.lo, dom.hi};
      for (const auto& x : breakpoints(a)) {
        pts.push_back(x);
        pts.push_back(b.apply_inverse(x));
      }
      for (const auto& x : breakpoints(b)) {
        pts.push_back(x);
        pts.push_back(a.apply_inverse(x));
      }
      for (const auto& x : pts) {
        if (a.apply(b.apply(x)) != b.apply(a.apply(x))) {
          throw CommutationError("windowed maps " + std::to_string(i) + " and " + std::to_string(j) +
                                 " do not commute at " + x.str());
        }
      }
    }
  }
  w.common = {dom};
  for (const auto& m : maps) w.common = intersect(w.common, m.fixed_points());
  w.whole_domain = w.common.size() == 1 && w.common[0] == dom;
  if (!w.common.empty()) w.point = w.common.front().lo;
  return w;
}

FixWitness common_fixed_fibers(std::span<const SkewMap> maps) {
  for (const auto& m : maps) {
    if (m.axis() != Axis::over_x || !m.base().is_identity()) {
      throw std::invalid_argument("common_fixed_fibers expects fiber translations over x");
    }
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      if (compose(maps[i], maps[j]) != compose(maps[j], maps[i])) {
        throw CommutationError("maps " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
      }
    }
  }
  FixWitness w{FixedSet::full(), std::nullopt};
  for (const auto& m : maps) w.common = w.common.intersect(zero_set(m.fiber()));
  w.point = w.common.first_point();
  return w;
}

// ---------------------------------------------------------------- I/O

ActionSpec read_action(std::istream& in) {
  const auto lines = io_detail::significant_lines(in);
  if (lines.empty() || lines[0].second != "plaction v1") {
    throw ParseError(lines.empty() ? 0 : lines[0].first, "expected header 'plaction v1'");
  }
  std::optional<ActionGroup> group;
  std::optional<int> dir;
  std::optional<Rational> x0;
  std::vector<Piece> pieces;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, text] = lines[i];
    auto value_of = [&](std::string_view key) -> std::optional<std::string> {
      if (text.rfind(key, 0) != 0) return std::nullopt;
      std::string v = text.substr(key.size());
      v.erase(0, v.find_first_not_of(" \t"));
      return v;
    };
    if (auto v = value_of("group:")) {
      if (*v == "Z2") group = ActionGroup::z2;
      else if (*v == "K") group = ActionGroup::klein;
      else throw ParseError(no, "group must be Z2 or K");
    } else if (auto v = value_of("dir:")) {
      if (*v == "+1" || *v == "1") dir = 1;
      else if (*v == "-1") dir = -1;
      else throw ParseError(no, "dir must be +1 or -1");
    } else if (auto v = value_of("x0:")) {
      try {
        x0 = Rational::parse(*v);
      } catch (const std::invalid_argument& e) {
        throw ParseError(no, e.what());
      }
    } else {
      pieces.push_back(io_detail::parse_piece(no, text));
    }
  }
  if (!group || !dir || !x0) throw ParseError(0, "missing group, dir or x0");
  const Rational lo = *dir == 1 ? *x0 : *x0 - Rational(1);
  try {
    return ActionSpec(*group, *dir, *x0, IntervalMap::from_pieces(lo, lo + Rational(1), std::move(pieces)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

ActionSpec read_action(const std::string& text) {
  std::istringstream in(text);
  return read_action(in);
}

std::string write_action(const ActionSpec& spec) {
  std::string out = "plaction v1\n";
  out += std::string("group: ") + (spec.group() == ActionGroup::z2 ? "Z2" : "K") + "\n";
  out += std::string("dir: ") + (spec.direction() == 1 ? "+1" : "-1") + "\n";
  out += "x0: " + spec.x0().str() + "\n";
  for (const auto& p : spec.seed().pieces()) out += io_detail::format_piece(p) + "\n";
  return out;
}

}  // namespace plh
