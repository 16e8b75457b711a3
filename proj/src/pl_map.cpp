#include "plh/pl_map.hpp"

#include <algorithm>
#include <sstream>

namespace plh {

namespace {

const Rational kOne(1);

// Index of the piece containing r, where r is already reduced into [0,1).
std::size_t piece_index(const std::vector<Piece>& pieces, const Rational& r) {
  auto it = std::upper_bound(pieces.begin(), pieces.end(), r,
                             [](const Rational& v, const Piece& p) { return v < p.x; });
  return static_cast<std::size_t>(std::distance(pieces.begin(), it)) - 1;
}

Rational end_of(const std::vector<Piece>& pieces, std::size_t i) {
  return i + 1 < pieces.size() ? pieces[i + 1].x : kOne;
}

Rational eval_reduced(const std::vector<Piece>& pieces, const Rational& r) {
  const Piece& p = pieces[piece_index(pieces, r)];
  return p.v + p.s * (r - p.x);
}

// Shared validation and canonicalization. `wrap` is the required jump of the
// value across one period: 0 for periodic functions, 1 for lifts.
std::vector<Piece> canonicalize(std::vector<Piece> raw, const Rational& wrap, bool lift) {
  if (raw.empty()) throw PLError("no pieces");
  std::sort(raw.begin(), raw.end(), [](const Piece& a, const Piece& b) { return a.x < b.x; });
  if (raw.front().x != Rational(0)) {
    throw PLError("pieces do not cover [0,1): first breakpoint is " + raw.front().x.str());
  }
  if (raw.back().x >= kOne) {
    throw PLError("breakpoint " + raw.back().x.str() + " out of range [0,1)");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i + 1 < raw.size() && raw[i + 1].x == raw[i].x) {
      throw PLError("degenerate piece at breakpoint " + raw[i].x.str());
    }
    if (lift && raw[i].s.sign() <= 0) {
      throw PLError("lift has non-positive slope " + raw[i].s.str() + " at " + raw[i].x.str());
    }
    const Rational end_value = raw[i].v + raw[i].s * (end_of(raw, i) - raw[i].x);
    const Rational expected = i + 1 < raw.size() ? raw[i + 1].v : raw[0].v + wrap;
    if (end_value != expected) {
      throw PLError("discontinuity at " + end_of(raw, i).str() + ": left value " +
                    end_value.str() + ", right value " + expected.str());
    }
  }
  std::vector<Piece> out;
  out.reserve(raw.size());
  for (auto& p : raw) {
    if (!out.empty() && out.back().s == p.s) continue;
    out.push_back(std::move(p));
  }
  return out;
}

// Breakpoints of outer o g within [0,1): those of g plus preimages of the
// outer breakpoints.
template <typename Outer>
std::vector<Piece> compose_pieces(const Outer& outer, const PLLift& g) {
  std::vector<Rational> cuts;
  for (const auto& p : g.pieces()) cuts.push_back(p.x);
  const Rational g0 = g(Rational(0));
  for (const auto& p : outer.pieces()) {
    // the unique translate p.x + m inside [g(0), g(0)+1)
    cuts.push_back(g.preimage(p.x - (p.x - g0).floor()));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Piece> out;
  out.reserve(cuts.size());
  for (const auto& c : cuts) {
    const Rational gc = g(c);
    out.push_back({c, outer(gc), outer.slope_at(gc) * g.slope_at(c)});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- PLFunc

PLFunc PLFunc::from_pieces(std::vector<Piece> raw) {
  PLFunc f;
  f.pieces_ = canonicalize(std::move(raw), Rational(0), false);
  return f;
}

PLFunc PLFunc::constant(const Rational& c) {
  PLFunc f;
  f.pieces_ = {{Rational(0), c, Rational(0)}};
  return f;
}

Rational PLFunc::operator()(const Rational& x) const { return eval_reduced(pieces_, x.frac()); }

Rational PLFunc::slope_at(const Rational& x) const {
  return pieces_[piece_index(pieces_, x.frac())].s;
}

// ---------------------------------------------------------------- PLLift

PLLift PLLift::from_pieces(std::vector<Piece> raw) {
  PLLift f;
  f.pieces_ = canonicalize(std::move(raw), kOne, true);
  return f;
}

PLLift PLLift::translation(const Rational& t) {
  PLLift f;
  f.pieces_ = {{Rational(0), t, kOne}};
  return f;
}

Rational PLLift::operator()(const Rational& x) const {
  const Rational n = x.floor();
  return eval_reduced(pieces_, x - n) + n;
}

Rational PLLift::slope_at(const Rational& x) const {
  return pieces_[piece_index(pieces_, x.frac())].s;
}

Rational PLLift::preimage(const Rational& y) const {
  const Rational& f0 = pieces_.front().v;
  const Rational m = (y - f0).floor();
  const Rational r = y - m;  // in [F(0), F(0)+1)
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), r,
                             [](const Rational& v, const Piece& p) { return v < p.v; });
  const Piece& p = *std::prev(it);
  return p.x + (r - p.v) / p.s + m;
}

std::optional<Rational> PLLift::translation_amount() const {
  if (pieces_.size() == 1 && pieces_.front().s == kOne) return pieces_.front().v;
  return std::nullopt;
}

// ---------------------------------------------------------------- algebra

PLLift compose(const PLLift& f, const PLLift& g) {
  return PLLift::from_pieces(compose_pieces(f, g));
}

PLFunc compose(const PLFunc& tau, const PLLift& sigma) {
  return PLFunc::from_pieces(compose_pieces(tau, sigma));
}

PLLift inverse(const PLLift& f) {
  std::vector<Rational> cuts{Rational(0)};
  for (const auto& p : f.pieces()) cuts.push_back(p.v.frac());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Piece> out;
  out.reserve(cuts.size());
  for (const auto& y : cuts) {
    const Rational x = f.preimage(y);
    out.push_back({y, x, kOne / f.slope_at(x)});
  }
  return PLLift::from_pieces(std::move(out));
}

PLLift power(const PLLift& f, long n) {
  PLLift base = n < 0 ? inverse(f) : f;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  PLLift result = PLLift::identity();
  while (e != 0) {
    if (e & 1U) result = compose(result, base);
    e >>= 1U;
    if (e != 0) base = compose(base, base);
  }
  return result;
}

PLFunc linear_combine(std::span<const Term> terms) {
  if (terms.empty()) return PLFunc::constant(Rational(0));
  std::vector<Rational> cuts;
  for (const auto& t : terms) {
    for (const auto& p : t.fn.pieces()) cuts.push_back(p.x);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Piece> out;
  out.reserve(cuts.size());
  for (const auto& c : cuts) {
    Rational v, s;
    for (const auto& t : terms) {
      v += t.coefficient * t.fn(c);
      s += t.coefficient * t.fn.slope_at(c);
    }
    out.push_back({c, v, s});
  }
  return PLFunc::from_pieces(std::move(out));
}

PLFunc operator+(const PLFunc& a, const PLFunc& b) {
  const Term terms[] = {{Rational(1), a}, {Rational(1), b}};
  return linear_combine(terms);
}

PLFunc operator-(const PLFunc& a, const PLFunc& b) {
  const Term terms[] = {{Rational(1), a}, {Rational(-1), b}};
  return linear_combine(terms);
}

PLFunc operator-(const PLFunc& a) { return Rational(-1) * a; }

PLFunc operator*(const Rational& c, const PLFunc& a) {
  const Term terms[] = {{c, a}};
  return linear_combine(terms);
}

PLFunc shift(const PLFunc& tau, const Rational& s) {
  return compose(tau, PLLift::translation(-s));
}

PLFunc displacement(const PLLift& f) {
  std::vector<Piece> out;
  out.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) out.push_back({p.x, p.v - p.x, p.s - kOne});
  return PLFunc::from_pieces(std::move(out));
}

FixedSet zero_set(const PLFunc& tau) {
  const auto& ps = tau.pieces();
  std::vector<Interval> items;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Rational end = end_of(ps, i);
    if (ps[i].s.is_zero()) {
      if (ps[i].v.is_zero()) items.push_back({ps[i].x, end});
      continue;
    }
    const Rational z = ps[i].x - ps[i].v / ps[i].s;
    if (ps[i].x <= z && z < end) items.push_back({z, z});
  }
  return FixedSet::from_items(std::move(items));
}

FixedSet fixed_set(const PLLift& f) { return zero_set(displacement(f)); }

Rational sup_abs(const PLFunc& tau) {
  Rational best;
  for (const auto& p : tau.pieces()) best = max(best, p.v.abs());
  return best;
}

Rational sup_displacement(const PLLift& f) { return sup_abs(displacement(f)); }

FixedSet image(const FixedSet& set, const PLLift& f) {
  if (set.is_full()) return set;
  std::vector<Interval> items;
  items.reserve(set.items().size());
  for (const auto& it : set.items()) items.push_back({f(it.lo), f(it.hi)});
  return FixedSet::from_items(std::move(items));
}

std::string pieces_str(const std::vector<Piece>& ps) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i != 0) os << "; ";
    os << ps[i].x << ':' << ps[i].v << ',' << ps[i].s;
  }
  os << ']';
  return os.str();
}

PLLift lift_from_window(const Rational& start, std::vector<Piece> raw) {
  if (raw.empty()) throw PLError("no pieces");
  std::sort(raw.begin(), raw.end(), [](const Piece& a, const Piece& b) { return a.x < b.x; });
  if (raw.front().x != start) {
    throw PLError("first breakpoint " + raw.front().x.str() + " differs from window start " +
                  start.str());
  }
  if (raw.back().x >= start + kOne) {
    throw PLError("breakpoint " + raw.back().x.str() + " outside window");
  }
  std::vector<Piece> out;
  out.reserve(raw.size() + 1);
  if (!start.is_integer()) {
    // the integer point inside the window becomes breakpoint 0
    const Rational n = start.floor() + kOne;
    const bool present = std::any_of(raw.begin(), raw.end(), [&](const Piece& p) { return p.x == n; });
    if (!present) {
      const Piece& p = raw[piece_index(raw, n)];
      out.push_back({Rational(0), p.v + p.s * (n - p.x) - n, p.s});
    }
  }
  for (const auto& p : raw) {
    const Rational k = p.x.floor();
    out.push_back({p.x - k, p.v - k, p.s});
  }
  return PLLift::from_pieces(std::move(out));
}

PLLift half_shift_extension(const std::vector<Piece>& half) {
  const Rational h(1, 2);
  if (half.empty() || half.front().x != Rational(0) || half.front().v != Rational(0)) {
    throw PLError("half-period map must start at (0, 0)");
  }
  const Piece& last = half.back();
  if (last.x >= h || last.v + last.s * (h - last.x) != h) {
    throw PLError("half-period map must fix 1/2");
  }
  std::vector<Piece> out(half.begin(), half.end());
  for (const auto& p : half) {
    if (p.s.sign() <= 0) throw PLError("half-period map has non-positive slope");
    out.push_back({p.v + h, p.x + h, kOne / p.s});
  }
  return PLLift::from_pieces(std::move(out));
}

}  // namespace plh
