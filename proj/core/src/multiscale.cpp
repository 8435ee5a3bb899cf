#include "fz/multiscale.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace fz {

namespace {

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
  return symmetric_difference(a, set_intersection(a, b));
}

LengthSystem k_lengths_of(const IntervalSet& s) {
  LengthSystem out;
  for (const Interval& c : s.components()) {
    if (c.lo < c.hi) out.add(c.hi - c.lo);
  }
  out.normalize();
  return out;
}

Rat rule_eta(const ScaleRule& r, long n) { return rat_pow(Rat(1, r.base), n + r.shift); }

// first stage whose doubled scale fits inside the gap
long rule_detect(const ScaleRule& r, const Rat& gap) {
  Rat half = gap / 2;
  if (half >= 1) return 1;
  long n = ceil_neg_log(half, r.base) - r.shift;
  if (n < 1) n = 1;
  while (2 * rule_eta(r, n) > gap) ++n;
  while (n > 1 && 2 * rule_eta(r, n - 1) <= gap) --n;
  return n;
}

bool system_has(const LengthSystem& s, const Rat& len, long long mult) {
  for (const auto& e : s.entries)
    if (e.length == len) return e.mult == mult;
  return false;
}

std::vector<std::pair<Rat, Rat>> preamble_from(const LengthSystem& s) {
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& e : s.entries) out.emplace_back(Rat(static_cast<long>(e.mult)), e.length);
  return out;
}

ZetaForm finite_form(const LengthSystem& system) {
  ZetaForm z;
  z.kind = ZetaKind::Finite;
  z.preamble = preamble_from(system);
  z.series = system;
  return z;
}

ZetaForm truncated_form(const LengthSystem& system, TailRule tail = {}) {
  ZetaForm z;
  z.kind = ZetaKind::Truncated;
  z.series = system;
  z.series_tail = std::move(tail);
  return z;
}

LatticePart lattice_from_anchor(long base, const Rat& l0, long long m0, long long ratio) {
  LatticePart lp;
  lp.base = base;
  long n0 = ceil_neg_log(l0, base);
  lp.scale = l0 * rat_pow(Rat(base), n0);
  lp.num.assign(static_cast<std::size_t>(n0) + 1, Rat(0));
  lp.num.back() = Rat(static_cast<long>(m0));
  lp.den = {Rat(1), Rat(-static_cast<long>(ratio))};
  return lp;
}

// continuation of the +inf system is the length tail itself when the run
// reached the entry right above it; otherwise the remainder is unknown
TailRule adjacent_tail(const LengthSystem& system, const TailRule& tail) {
  if (const auto* gt = std::get_if<GeometricTail>(&tail)) {
    if (gt->mult_ratio >= 1 && gt->first_mult % gt->mult_ratio == 0) {
      Rat prev_len = gt->first_length / gt->length_ratio;
      long long prev_mult = gt->first_mult / gt->mult_ratio;
      if (system_has(system, prev_len, prev_mult)) return tail;
    }
  } else if (const auto* pt = std::get_if<PowerTail>(&tail)) {
    if (pt->first_index >= 2) {
      Rat prev_len =
          rat_pow(Rat(1, pt->first_index - 1), pt->a) - rat_pow(Rat(1, pt->first_index), pt->a);
      if (system_has(system, prev_len, 1)) return tail;
    }
  }
  return {};
}

void recognize_minus(MzfResult& r, const PointMassMeasure& m) {
  const ScaleRule& rule = *r.scales.rule;
  long N = r.scales.count();

  // gap cascade of each piece: every level scales lengths by 1/base and
  // counts by the number of copies; only the two-map pieces stay geometric
  struct Level {
    Rat gap;
    long long count;
    long detect;
    Rat effective;
  };
  std::vector<Level> levels;
  bool have_piece = false;
  for (const auto& piece : m.boundary.pieces) {
    if (piece.offsets.size() != 2) return;
    have_piece = true;
  }
  if (have_piece && m.boundary.pieces.size() != 1) return;

  long bp = 0;
  long long copies = 0;
  if (have_piece) {
    const auto& piece = m.boundary.pieces.front();
    bp = piece.base;
    copies = piece.copies();
    Rat gap = (piece.offsets[1] - piece.offsets[0] - Rat(1, bp)) * piece.span();
    long long count = 1;
    while (true) {
      long det = rule_detect(rule, gap);
      Level lv{gap, count, det, gap - 2 * rule_eta(rule, det)};
      levels.push_back(lv);
      if (det > N) break;
      gap /= bp;
      count *= copies;
    }
  }

  std::map<long, LengthSystem> predicted;
  for (const Level& lv : levels) {
    if (lv.detect >= 2 && lv.detect <= N) predicted[lv.detect].add(lv.effective, lv.count);
  }
  for (long n = 2; n <= N; ++n) {
    LengthSystem want = predicted.count(n) ? predicted[n] : LengthSystem{};
    want.normalize();
    if (!(r.stages[static_cast<std::size_t>(n - 1)].k_lengths == want)) return;
  }

  if (!have_piece) {
    // accumulation train only: nothing ever survives the endpoint filter again
    r.form = finite_form(r.system);
    return;
  }

  // the continuation stays geometric only when detection advances uniformly,
  // i.e. the cascade base is a power of the rule base
  {
    Rat p(1);
    bool ok = false;
    for (int d = 1; d <= 64; ++d) {
      p /= rule.base;
      if (p == Rat(1, bp)) {
        ok = true;
        break;
      }
      if (p < Rat(1, bp)) break;
    }
    if (!ok) return;
  }

  // walk the cascade back from the first beyond-range level to find where the
  // computed system stops matching; everything above is the preamble
  std::size_t anchor = levels.size() - 1;
  while (anchor > 0) {
    const Level& prev = levels[anchor - 1];
    if (prev.detect < 2 || !system_has(r.system, prev.effective, prev.count)) break;
    --anchor;
  }
  LengthSystem rest;
  for (const auto& e : r.system.entries) {
    bool absorbed = false;
    for (std::size_t i = anchor; i < levels.size(); ++i) {
      if (levels[i].effective == e.length && levels[i].count == e.mult) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) rest.add(e.length, e.mult);
  }
  rest.normalize();

  ZetaForm z;
  z.kind = ZetaKind::Lattice;
  z.preamble = preamble_from(rest);
  z.lattice = lattice_from_anchor(bp, levels[anchor].effective, levels[anchor].count, copies);
  z.series = r.system;
  r.form = std::move(z);
}

void recognize_plus(MzfResult& r, const PointMassMeasure& m) {
  long N = r.scales.count();
  for (long n = 1; n <= N; ++n) {
    const auto& st = r.stages[static_cast<std::size_t>(n - 1)];
    for (const auto& e : st.k_lengths.entries) {
      if (e.length <= st.eta) return;
      if (n >= 2 && e.length > r.scales.etas[static_cast<std::size_t>(n - 2)]) return;
    }
  }

  const auto* gt = std::get_if<GeometricTail>(&m.length_tail);
  if (gt == nullptr || gt->length_ratio.get_num() != 1 || gt->mult_ratio < 1) return;
  long bp = static_cast<long>(gt->length_ratio.get_den().get_si());
  if (bp < 2) return;

  Rat len = gt->first_length;
  long long mult = gt->first_mult;
  Rat anchor_len;
  long long anchor_mult = 0;
  std::set<std::size_t> absorbed;
  while (mult % gt->mult_ratio == 0 && mult / gt->mult_ratio >= 1) {
    len *= bp;
    mult /= gt->mult_ratio;
    bool found = false;
    for (std::size_t i = 0; i < r.system.entries.size(); ++i) {
      if (r.system.entries[i].length == len && r.system.entries[i].mult == mult) {
        absorbed.insert(i);
        found = true;
        break;
      }
    }
    if (!found) break;
    anchor_len = len;
    anchor_mult = mult;
  }
  if (anchor_mult == 0) return;

  LengthSystem rest;
  for (std::size_t i = 0; i < r.system.entries.size(); ++i) {
    if (!absorbed.count(i)) rest.add(r.system.entries[i].length, r.system.entries[i].mult);
  }
  rest.normalize();

  ZetaForm z;
  z.kind = ZetaKind::Lattice;
  z.preamble = preamble_from(rest);
  z.lattice = lattice_from_anchor(bp, anchor_len, anchor_mult, gt->mult_ratio);
  z.series = r.system;
  r.form = std::move(z);
}

}  // namespace

bool ZetaForm::entire() const { return kind == ZetaKind::Finite; }

ScaleSequence ScaleSequence::from_rule(long base, long shift, int count) {
  if (base < 2) throw ValidationError("scale rule base must be at least 2");
  if (shift < 0) throw ValidationError("scale rule shift must be nonnegative");
  if (count < 1) throw ValidationError("scale rule needs at least one stage");
  ScaleSequence s;
  s.rule = ScaleRule{base, shift};
  for (int n = 1; n <= count; ++n) s.etas.push_back(rule_eta(*s.rule, n));
  return s;
}

ScaleSequence ScaleSequence::from_list(std::vector<Rat> etas) {
  ScaleSequence s;
  s.etas = std::move(etas);
  return s;
}

void ScaleSequence::validate() const {
  if (etas.empty()) throw ValidationError("scale sequence is empty");
  for (std::size_t i = 0; i < etas.size(); ++i) {
    if (!(etas[i] > 0 && etas[i] < 1))
      throw ValidationError("scale " + rat_str(etas[i]) + " outside (0, 1)");
    if (i > 0 && !(etas[i] < etas[i - 1]))
      throw ValidationError("scales must be strictly decreasing");
  }
}

IntervalSet stage_R(const PointMassMeasure& m, const Rat& eta, const Alpha& alpha) {
  return window_start_set(m, eta, alpha).minkowski_sum_window(eta);
}

IntervalSet stage_J(const IntervalSet& r_prev, const IntervalSet& r_cur) {
  return symmetric_difference(r_prev, r_cur);
}

IntervalSet stage_K(const IntervalSet& j_cur, const IntervalSet& r_prev) {
  std::set<Rat> lefts, rights;
  for (const Interval& c : r_prev.components()) {
    lefts.insert(c.lo);
    rights.insert(c.hi);
  }
  std::vector<Interval> kept;
  for (const Interval& c : j_cur.components()) {
    if (!lefts.count(c.lo) && !rights.count(c.hi)) kept.push_back(c);
  }
  return IntervalSet(std::move(kept));
}

MzfResult build_mzf(const PointMassMeasure& m, const ScaleSequence& scales, const Alpha& alpha) {
  scales.validate();
  MzfResult r;
  r.alpha = alpha;
  r.scales = scales;

  IntervalSet prev;
  for (int i = 0; i < scales.count(); ++i) {
    const Rat& eta = scales.etas[static_cast<std::size_t>(i)];
    IntervalSet R = stage_R(m, eta, alpha);
    IntervalSet J = (i == 0) ? R : stage_J(prev, R);
    IntervalSet K = (i == 0) ? R : stage_K(J, prev);
    StageDecomposition st;
    st.n = i + 1;
    st.eta = eta;
    st.R = R;
    st.J = J;
    st.K = K;
    st.k_lengths = k_lengths_of(K);
    r.stages.push_back(std::move(st));
    prev = std::move(R);
  }
  for (const auto& st : r.stages) {
    for (const auto& e : st.k_lengths.entries) r.system.add(e.length, e.mult);
  }
  r.system.normalize();

  if (alpha.kind == AlphaKind::Finite) {
    r.form = finite_form(r.system);
  } else if (!scales.rule || scales.count() < 5) {
    r.form = truncated_form(r.system, alpha.kind == AlphaKind::PlusInf
                                          ? adjacent_tail(r.system, m.length_tail)
                                          : TailRule{});
  } else if (alpha.kind == AlphaKind::MinusInf) {
    r.form = truncated_form(r.system);
    recognize_minus(r, m);
  } else {
    r.form = truncated_form(r.system, adjacent_tail(r.system, m.length_tail));
    recognize_plus(r, m);
  }
  r.entire = r.form.entire();
  return r;
}

EffectiveLengths effective_lengths(const FractalString& s, const ScaleSequence& scales) {
  scales.validate();
  EffectiveLengths out;
  PointMassMeasure m = boundary_measure(s);
  IntervalSet r1 = stage_R(m, scales.etas.front(), Alpha::minus_inf());
  for (const Interval& c : r1.components()) {
    if (c.lo < c.hi) {
      out.k1_lengths.push_back(c.hi - c.lo);
      out.system.add(c.hi - c.lo);
    }
  }
  GapSystem gs = gap_lengths(s);
  for (const auto& e : gs.gaps.entries) {
    EffectiveGap g;
    g.gap = e.length;
    g.mult = e.mult;
    for (int n = 1; n <= scales.count(); ++n) {
      if (2 * scales.etas[static_cast<std::size_t>(n - 1)] <= e.length) {
        g.detect_stage = n;
        break;
      }
    }
    if (g.detect_stage > 0)
      g.effective_length = e.length - 2 * scales.etas[static_cast<std::size_t>(g.detect_stage - 1)];
    out.gaps.push_back(g);
    if (g.detect_stage >= 2) out.system.add(g.effective_length, e.mult);
  }
  out.system.normalize();
  return out;
}

bool verify_geometric_recovery(const FractalString& s, const ScaleSequence& scales) {
  scales.validate();
  if (!(scales.etas.back() < s.min_represented_length))
    throw ValidationError("last scale must fall below the smallest represented length");
  MzfResult r = build_mzf(boundary_measure(s), scales, Alpha::plus_inf());
  return r.system == s.lengths;
}

}  // namespace fz
