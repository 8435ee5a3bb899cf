#pragma once

#include <vector>

#include "fz/rational.hpp"

namespace fz {

// Interval with independent endpoint flags. Degenerate single points are
// closed on both sides; empty intervals are not representable.
struct Interval {
  Rat lo, hi;
  bool lo_closed = false;
  bool hi_closed = false;

  Interval() : lo(0), hi(0), lo_closed(true), hi_closed(true) {}
  Interval(Rat l, Rat h, bool lc, bool hc);

  static Interval open(Rat l, Rat h) { return Interval(std::move(l), std::move(h), false, false); }
  static Interval closed(Rat l, Rat h) { return Interval(std::move(l), std::move(h), true, true); }
  static Interval point(Rat p) {
    Rat q = p;
    return Interval(std::move(p), std::move(q), true, true);
  }

  bool is_point() const { return lo == hi; }
  Rat length() const { return hi - lo; }
  bool contains(const Rat& x) const;
};

bool operator==(const Interval& a, const Interval& b);

// Finite union of intervals in normal form: components sorted, disjoint and
// non-mergeable (adjacent components always leave a missing point between them).
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> raw);  // normalizes arbitrary input

  const std::vector<Interval>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }
  bool contains(const Rat& x) const;
  Rat total_length() const;

  // Complement relative to [0,1]; the set must lie inside the unit interval.
  IntervalSet complement_in_unit() const;

  // Union over c in this set of the closed window [c, c + eta], eta > 0.
  // Each component C maps to [inf C, sup C + eta] keeping C's endpoint flags.
  IntervalSet minkowski_sum_window(const Rat& eta) const;

  friend IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
  friend IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
  friend IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b);

 private:
  static IntervalSet combine(const IntervalSet& a, const IntervalSet& b, int op);
  std::vector<Interval> comps_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b);
bool operator==(const IntervalSet& a, const IntervalSet& b);

}  // namespace fz
