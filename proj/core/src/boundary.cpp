#include "fz/boundary.hpp"

#include <cmath>
#include <functional>
#include <set>

namespace fz {

double SelfSimilarSet::dimension() const {
  if (offsets.size() <= 1) return 0.0;
  return std::log(static_cast<double>(offsets.size())) / std::log(static_cast<double>(base));
}

void SelfSimilarSet::for_each_gap_at_least(
    const Rat& min_len, const std::function<void(const Rat&, const Rat&, int)>& fn) const {
  if (min_len <= 0) throw ValidationError("gap length cutoff must be positive");
  if (offsets.size() <= 1) return;
  std::function<void(const Rat&, const Rat&, int)> walk = [&](const Rat& cell_lo,
                                                              const Rat& cell_span, int level) {
    Rat child_span = cell_span / base;
    for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
      Rat gap_lo = cell_lo + offsets[i] * cell_span + child_span;
      Rat gap_hi = cell_lo + offsets[i + 1] * cell_span;
      if (gap_hi - gap_lo >= min_len) fn(gap_lo, gap_hi, level);
    }
    // every gap below this cell is shorter than a child cell
    if (child_span >= min_len) {
      for (const Rat& off : offsets) walk(cell_lo + off * cell_span, child_span, level + 1);
    }
  };
  walk(lo, span(), 1);
}

namespace {

bool cell_meets_open(const SelfSimilarSet& p, const Rat& cell_lo, const Rat& cell_span,
                     const Rat& a, const Rat& b) {
  Rat cell_hi = cell_lo + cell_span;
  if (cell_hi <= a || cell_lo >= b) return false;
  if (cell_lo > a && cell_lo < b) return true;
  if (cell_hi > a && cell_hi < b) return true;
  // (a,b) is strictly inside this cell; descend until a corner lands in it
  for (const Rat& off : p.offsets) {
    if (cell_meets_open(p, cell_lo + off * cell_span, cell_span / p.base, a, b)) return true;
  }
  return false;
}

}  // namespace

bool SelfSimilarSet::intersects_open(const Rat& a, const Rat& b) const {
  if (!(a < b)) return false;
  if (offsets.empty()) return false;
  return cell_meets_open(*this, lo, span(), a, b);
}

bool SelfSimilarSet::contains_point(const Rat& x) const {
  if (offsets.empty()) return false;
  if (x < lo || x > hi) return false;
  Rat t = (x - lo) / span();
  std::set<Rat> seen;
  while (true) {
    if (t == 0 || t == 1) return true;
    if (!seen.insert(t).second) return true;  // periodic address, so x is a limit of corners
    bool descended = false;
    for (const Rat& off : offsets) {
      Rat rel = t - off;
      if (rel < 0) continue;
      Rat scaled = rel * base;
      if (scaled > 1) continue;
      if (scaled == 0 || scaled == 1) return true;
      t = scaled;
      descended = true;
      break;
    }
    if (!descended) return false;
  }
}

}  // namespace fz
