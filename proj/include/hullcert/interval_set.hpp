#pragma once

#include <vector>

#include "hullcert/rational.hpp"

namespace hullcert {

/// Half-open interval [lo, hi) inside [0, 1).
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite union of half-open subintervals of [0, 1).
///
/// The stored list is always in normal form: sorted, nonempty intervals with
/// strictly separated endpoints (hi_k < lo_{k+1}), so two sets are equal
/// exactly when their interval lists are equal.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Normalizes an arbitrary list of pairs. Empty pairs (lo == hi) are dropped,
  /// overlapping and touching pairs merged. Throws std::invalid_argument for a
  /// pair outside [0, 1] or with lo > hi.
  static IntervalSet make(std::vector<Interval> raw);
  static IntervalSet full();
  /// [lo, hi); empty when lo == hi.
  static IntervalSet range(const Rational& lo, const Rational& hi);

  const std::vector<Interval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& t) const;
  Rational measure() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet complement(const IntervalSet& a);
IntervalSet difference(const IntervalSet& a, const IntervalSet& b);

/// μ(a ∩ b) without materializing the intersection.
Rational overlap(const IntervalSet& a, const IntervalSet& b);

std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

}  // namespace hullcert
