#pragma once

#include <string>

#include "fz/fractal_string.hpp"

namespace fz {

enum class AlphaKind { MinusInf, Finite, PlusInf };

// Regularity value log mu(U) / log |U|. Finite values stay symbolic as the
// pair (k, eta) for exact equality tests; k == 1 means regularity zero.
struct Alpha {
  AlphaKind kind = AlphaKind::Finite;
  long long k = 1;
  Rat eta = Rat(1, 2);

  static Alpha minus_inf();
  static Alpha plus_inf();
  static Alpha finite(long long k, const Rat& eta);

  // Same regularity value: log k / log eta == log k' / log eta', decided by
  // prime-exponent proportionality of the two pairs.
  bool same_class(const Alpha& other) const;
  double value() const;
  std::string str() const;
};

struct MassValue {
  bool infinite = false;
  long long count = 0;  // meaningful when finite
};

// Unit point masses at interval endpoints, truncated like the string it came
// from. Atoms shared by two intervals carry mass 2. Accumulation structure
// (attractor pieces, limit points, zones) is kept symbolic.
struct PointMassMeasure {
  std::vector<Rat> atoms;       // strictly increasing
  std::vector<long long> mass;  // parallel to atoms, each >= 1

  BoundaryModel boundary;
  std::vector<PieceResolution> piece_resolution;  // parallel to boundary.pieces
  std::vector<Zone> zones;

  // symbolic context for closed-form confirmation downstream
  std::optional<GapTail> gap_tail;
  TailRule length_tail;
  Generator generator = Generator::Custom;

  MassValue measure_of(const Interval& u) const;

  // Smallest window length for which full-window classification is exact:
  // the max over zone thetas and unresolved attractor-gap thetas.
  Rat plus_validity_threshold() const;
  bool has_accumulation_zones() const;
  long long mass_in_closed(const Rat& lo, const Rat& hi) const;
};

PointMassMeasure boundary_measure(const FractalString& s);

// A(u) = log mu(u) / log |u| with the usual conventions: +inf when the mass
// is zero, -inf when it is infinite. Rejects degenerate u.
Alpha regularity_of(const PointMassMeasure& m, const Interval& u);

// Start positions c in [0, 1 - eta] whose closed window [c, c + eta] realizes
// the requested regularity. Exact for minus-infinity at every scale; for
// plus-infinity and finite alpha the scale must clear plus_validity_threshold.
IntervalSet window_start_set(const PointMassMeasure& m, const Rat& eta, const Alpha& alpha);

}  // namespace fz
