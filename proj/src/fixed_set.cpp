#include "plh/pl_map.hpp"

#include <algorithm>
#include <sstream>

namespace plh {

FixedSet FixedSet::full() {
  FixedSet s;
  s.full_ = true;
  return s;
}

FixedSet FixedSet::from_items(std::vector<Interval> raw) {
  const Rational one(1);
  std::vector<Interval> reduced;
  reduced.reserve(raw.size() + 1);
  bool wraps = false;
  for (auto& it : raw) {
    if (it.hi < it.lo) throw PLError("interval with hi < lo");
    if (it.hi - it.lo >= one) return full();
    const Rational k = it.lo.floor();
    Rational lo = it.lo - k;
    Rational hi = it.hi - k;
    if (hi <= one) {
      reduced.push_back({std::move(lo), std::move(hi)});
      wraps = wraps || reduced.back().hi == one;
    } else {
      reduced.push_back({std::move(lo), one});
      reduced.push_back({Rational(0), hi - one});
      wraps = true;
    }
  }
  if (wraps) reduced.push_back({Rational(0), Rational(0)});
  std::sort(reduced.begin(), reduced.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  FixedSet s;
  for (auto& it : reduced) {
    if (!s.items_.empty() && it.lo <= s.items_.back().hi) {
      s.items_.back().hi = max(s.items_.back().hi, it.hi);
    } else {
      s.items_.push_back(std::move(it));
    }
  }
  if (s.items_.size() == 1 && s.items_[0].lo == Rational(0) && s.items_[0].hi == one) return full();
  return s;
}

bool FixedSet::contains(const Rational& x) const {
  if (full_) return true;
  const Rational r = x.frac();
  return std::any_of(items_.begin(), items_.end(), [&](const Interval& it) { return it.contains(r); });
}

bool FixedSet::subset_of(const FixedSet& other) const {
  if (other.full_) return true;
  if (full_) return false;
  return std::all_of(items_.begin(), items_.end(), [&](const Interval& a) {
    return std::any_of(other.items_.begin(), other.items_.end(),
                       [&](const Interval& b) { return b.lo <= a.lo && a.hi <= b.hi; });
  });
}

FixedSet FixedSet::intersect(const FixedSet& other) const {
  if (full_) return other;
  if (other.full_) return *this;
  std::vector<Interval> out;
  for (const auto& a : items_) {
    for (const auto& b : other.items_) {
      Rational lo = max(a.lo, b.lo);
      Rational hi = min(a.hi, b.hi);
      if (lo <= hi) out.push_back({std::move(lo), std::move(hi)});
    }
  }
  return from_items(std::move(out));
}

FixedSet FixedSet::unite(const FixedSet& other) const {
  if (full_ || other.full_) return full();
  std::vector<Interval> all = items_;
  all.insert(all.end(), other.items_.begin(), other.items_.end());
  return from_items(std::move(all));
}

std::optional<Rational> FixedSet::first_point() const {
  if (full_) return Rational(0);
  if (items_.empty()) return std::nullopt;
  return items_.front().lo;
}

std::string FixedSet::str() const {
  if (full_) return "full";
  if (items_.empty()) return "empty";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i != 0) os << ", ";
    if (items_[i].is_point()) {
      os << items_[i].lo;
    } else {
      os << '[' << items_[i].lo << ", " << items_[i].hi << ']';
    }
  }
  os << '}';
  return os.str();
}

}  // namespace plh
