#pragma once

#include <optional>

#include "fz/measure.hpp"
#include "fz/zeta_form.hpp"

namespace fz {

struct ScaleRule {
  long base = 3;
  long shift = 1;  // eta_n = base^-(n + shift)
};

struct ScaleSequence {
  std::vector<Rat> etas;  // strictly decreasing, each in (0, 1)
  std::optional<ScaleRule> rule;

  static ScaleSequence from_rule(long base, long shift, int count);
  static ScaleSequence from_list(std::vector<Rat> etas);
  void validate() const;
  int count() const { return static_cast<int>(etas.size()); }
};

struct StageDecomposition {
  int n = 0;
  Rat eta;
  IntervalSet R, J, K;
  LengthSystem k_lengths;  // positive-length K components
};

struct MzfResult {
  Alpha alpha;
  ScaleSequence scales;
  std::vector<StageDecomposition> stages;
  LengthSystem system;  // K lengths aggregated across stages
  ZetaForm form;
  bool entire = false;
};

// R at one scale: the expanded window-start set. J: what changed from the
// previous scale. K: the J components whose endpoint positions are new
// (left endpoint not a previous left, right endpoint not a previous right);
// at the first stage K = J = R unconditionally.
IntervalSet stage_R(const PointMassMeasure& m, const Rat& eta, const Alpha& alpha);
IntervalSet stage_J(const IntervalSet& r_prev, const IntervalSet& r_cur);
IntervalSet stage_K(const IntervalSet& j_cur, const IntervalSet& r_prev);

MzfResult build_mzf(const PointMassMeasure& m, const ScaleSequence& scales, const Alpha& alpha);

struct EffectiveGap {
  Rat gap;
  long long mult = 0;
  int detect_stage = 0;  // first n with 2 eta_n <= gap; 0 when outside the range
  Rat effective_length;  // gap - 2 eta_detect
};

// Gap-driven shortcut to the minus-infinity length system: stage-1 component
// lengths plus, for every gap first detected at a later stage, the middle of
// length gap - 2 eta left between the receding collars.
struct EffectiveLengths {
  LengthSystem system;
  std::vector<Rat> k1_lengths;
  std::vector<EffectiveGap> gaps;  // formal per-gap values, stage-1 gaps included
};

EffectiveLengths effective_lengths(const FractalString& s, const ScaleSequence& scales);

// Plus-infinity run over the scales must return exactly the represented
// length multiset; requires the last scale below the smallest represented length.
bool verify_geometric_recovery(const FractalString& s, const ScaleSequence& scales);

}  // namespace fz
