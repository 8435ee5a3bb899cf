#pragma once

#include <functional>
#include <vector>

#include "fz/interval_set.hpp"

namespace fz {

// Attractor of the maps x -> lo + o*(hi - lo) + (x - lo)/base, one map per
// offset o. Offsets are fractions of the span, strictly increasing, with
// first 0 and last 1 - 1/base so the attractor touches both host endpoints.
struct SelfSimilarSet {
  Rat lo, hi;
  long base = 3;
  std::vector<Rat> offsets;

  Rat span() const { return hi - lo; }
  long copies() const { return static_cast<long>(offsets.size()); }
  double dimension() const;

  // Visit every complementary gap of length >= min_len as (a, b, level).
  void for_each_gap_at_least(const Rat& min_len,
                             const std::function<void(const Rat&, const Rat&, int)>& fn) const;

  // Does the open interval (a, b) contain a point of the attractor?
  bool intersects_open(const Rat& a, const Rat& b) const;

  bool contains_point(const Rat& x) const;
};

// One-sided limit point of the atom train. atoms_on_right means the atoms
// approach the point from above (a left-edge accumulation).
struct AccumulationPoint {
  Rat point;
  bool atoms_on_right = true;
};

// Region adjacent to an accumulation point that still holds atoms the
// truncation does not represent; theta bounds its longest atom-free stretch.
struct Zone {
  Rat lo, hi;
  Rat theta;
};

struct BoundaryModel {
  std::vector<SelfSimilarSet> pieces;
  std::vector<AccumulationPoint> accumulation_points;
  std::vector<Rat> isolated_points;  // endpoints not lying on any piece
};

// Truncation state of one self-similar piece: which complementary gaps have
// their interior structure represented, and how coarse the rest still is.
struct PieceResolution {
  Rat resolved_gap_min;        // gaps with length >= this are fully represented
  Rat largest_unresolved_gap;  // longest gap below that threshold
  Rat unresolved_theta;        // longest atom-free stretch inside any unresolved gap
};

}  // namespace fz
