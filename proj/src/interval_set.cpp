#include "hullcert/interval_set.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hullcert {

IntervalSet IntervalSet::make(std::vector<Interval> raw) {
  for (const auto& iv : raw) {
    if (iv.lo < 0 || iv.hi > 1) {
      throw std::invalid_argument("interval [" + iv.lo.str() + ", " + iv.hi.str() + ") leaves [0,1]");
    }
    if (iv.lo > iv.hi) {
      throw std::invalid_argument("interval [" + iv.lo.str() + ", " + iv.hi.str() + ") is reversed");
    }
  }
  std::erase_if(raw, [](const Interval& iv) { return iv.lo == iv.hi; });
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  IntervalSet out;
  for (auto& iv : raw) {
    if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
      if (iv.hi > out.parts_.back().hi) out.parts_.back().hi = std::move(iv.hi);
    } else {
      out.parts_.push_back(std::move(iv));
    }
  }
  return out;
}

IntervalSet IntervalSet::full() { return range(0, 1); }

IntervalSet IntervalSet::range(const Rational& lo, const Rational& hi) { return make({{lo, hi}}); }

bool IntervalSet::contains(const Rational& t) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Interval& iv) { return iv.lo <= t && t < iv.hi; });
}

Rational IntervalSet::measure() const {
  Rational total;
  for (const auto& iv : parts_) total += iv.length();
  return total;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  const auto& xs = a.intervals();
  const auto& ys = b.intervals();
  size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    const Rational& lo = std::max(xs[i].lo, ys[j].lo);
    const Rational& hi = std::min(xs[i].hi, ys[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (xs[i].hi < ys[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalSet::make(std::move(out));
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet::make(std::move(all));
}

IntervalSet complement(const IntervalSet& a) {
  std::vector<Interval> gaps;
  Rational cursor = 0;
  for (const auto& iv : a.intervals()) {
    if (cursor < iv.lo) gaps.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < 1) gaps.push_back({cursor, 1});
  return IntervalSet::make(std::move(gaps));
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) { return intersect(a, complement(b)); }

Rational overlap(const IntervalSet& a, const IntervalSet& b) {
  Rational total;
  const auto& xs = a.intervals();
  const auto& ys = b.intervals();
  size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    const Rational& lo = std::max(xs[i].lo, ys[j].lo);
    const Rational& hi = std::min(xs[i].hi, ys[j].hi);
    if (lo < hi) total += hi - lo;
    if (xs[i].hi < ys[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
  if (s.empty()) return os << "{}";
  bool first = true;
  for (const auto& iv : s.intervals()) {
    if (!first) os << " u ";
    os << "[" << iv.lo << ", " << iv.hi << ")";
    first = false;
  }
  return os;
}

}  // namespace hullcert
