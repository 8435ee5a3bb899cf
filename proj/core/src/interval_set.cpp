#include "fz/interval_set.hpp"

#include <algorithm>

namespace fz {

Interval::Interval(Rat l, Rat h, bool lc, bool hc)
    : lo(std::move(l)), hi(std::move(h)), lo_closed(lc), hi_closed(hc) {
  if (hi < lo) throw ValidationError("interval endpoints out of order");
  if (lo == hi && !(lo_closed && hi_closed)) throw ValidationError("empty interval");
}

bool Interval::contains(const Rat& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed;
}

namespace {

bool raw_member(const std::vector<Interval>& raw, const Rat& x) {
  for (const auto& iv : raw)
    if (iv.contains(x)) return true;
  return false;
}

// Rebuild normal form from a membership predicate sampled at every endpoint
// and at one interior point of every gap between consecutive endpoints.
// Membership is constant on those open segments, so this is exact.
template <class Member>
std::vector<Interval> assemble(const std::vector<Rat>& pts, Member member) {
  std::vector<Interval> out;
  if (pts.empty()) return out;

  // item 2i: point pts[i]; item 2i+1: open segment (pts[i], pts[i+1])
  size_t n = pts.size();
  auto included = [&](size_t item) {
    if (item % 2 == 0) return member(pts[item / 2]);
    return member((pts[item / 2] + pts[item / 2 + 1]) / 2);
  };

  size_t item = 0, total = 2 * n - 1;
  while (item < total) {
    if (!included(item)) {
      ++item;
      continue;
    }
    size_t first = item;
    while (item < total && included(item)) ++item;
    size_t last = item - 1;
    Rat lo = pts[first / 2];
    Rat hi = pts[last % 2 == 0 ? last / 2 : last / 2 + 1];
    out.push_back(Interval(std::move(lo), std::move(hi), first % 2 == 0, last % 2 == 0));
  }
  return out;
}

std::vector<Rat> endpoint_grid(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  std::vector<Rat> pts;
  pts.reserve(2 * (a.size() + b.size()));
  for (const auto& iv : a) {
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  for (const auto& iv : b) {
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> raw) {
  std::vector<Rat> pts = endpoint_grid(raw, {});
  comps_ = assemble(pts, [&raw](const Rat& x) { return raw_member(raw, x); });
}

bool IntervalSet::contains(const Rat& x) const {
  auto it = std::partition_point(comps_.begin(), comps_.end(),
                                 [&x](const Interval& iv) { return iv.hi < x; });
  return it != comps_.end() && it->contains(x);
}

Rat IntervalSet::total_length() const {
  Rat sum(0);
  for (const auto& iv : comps_) sum += iv.hi - iv.lo;
  return sum;
}

IntervalSet IntervalSet::complement_in_unit() const {
  if (!comps_.empty() && (comps_.front().lo < 0 || comps_.back().hi > 1))
    throw ValidationError("complement_in_unit: set leaves [0, 1]");
  IntervalSet unit(std::vector<Interval>{Interval::closed(Rat(0), Rat(1))});
  return symmetric_difference(unit, *this);
}

IntervalSet IntervalSet::minkowski_sum_window(const Rat& eta) const {
  if (eta <= 0) throw ValidationError("window length must be positive");
  std::vector<Interval> raw;
  raw.reserve(comps_.size());
  for (const auto& iv : comps_) raw.push_back(Interval(iv.lo, iv.hi + eta, iv.lo_closed, iv.hi_closed));
  return IntervalSet(std::move(raw));
}

IntervalSet IntervalSet::combine(const IntervalSet& a, const IntervalSet& b, int op) {
  std::vector<Rat> pts = endpoint_grid(a.comps_, b.comps_);
  auto member = [&a, &b, op](const Rat& x) {
    bool ia = a.contains(x), ib = b.contains(x);
    switch (op) {
      case 0: return ia || ib;
      case 1: return ia && ib;
      default: return ia != ib;
    }
  };
  IntervalSet out;
  out.comps_ = assemble(pts, member);
  return out;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  return IntervalSet::combine(a, b, 0);
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
  return IntervalSet::combine(a, b, 1);
}

IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b) {
  return IntervalSet::combine(a, b, 2);
}

bool operator==(const IntervalSet& a, const IntervalSet& b) {
  return a.components() == b.components();
}

}  // namespace fz
