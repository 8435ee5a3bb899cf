#include "fz/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace fz {

namespace {

// k = r^e with e maximal, so r is not itself a perfect power
std::pair<long long, unsigned> root_decompose(long long k) {
  mpz_class z(static_cast<long>(k));
  for (unsigned e = 62; e >= 2; --e) {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), e) != 0 && r >= 2) {
      return {r.get_si(), e};
    }
  }
  return {k, 1};
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
  return symmetric_difference(a, set_intersection(a, b));
}

IntervalSet clamp_to(const IntervalSet& s, const Rat& lo, const Rat& hi) {
  return set_intersection(s, IntervalSet({Interval::closed(lo, hi)}));
}

}  // namespace

Alpha Alpha::minus_inf() {
  Alpha a;
  a.kind = AlphaKind::MinusInf;
  return a;
}

Alpha Alpha::plus_inf() {
  Alpha a;
  a.kind = AlphaKind::PlusInf;
  return a;
}

Alpha Alpha::finite(long long k, const Rat& eta) {
  if (k < 1) throw ValidationError("atom count must be at least 1");
  if (!(eta > 0 && eta < 1)) throw ValidationError("window length must lie in (0, 1)");
  Alpha a;
  a.kind = AlphaKind::Finite;
  a.k = k;
  a.eta = eta;
  return a;
}

bool Alpha::same_class(const Alpha& other) const {
  if (kind != other.kind) return false;
  if (kind != AlphaKind::Finite) return true;
  if (k == 1 || other.k == 1) return k == other.k;
  auto [r1, e1] = root_decompose(k);
  auto [r2, e2] = root_decompose(other.k);
  if (r1 != r2) return false;
  // log k / log eta agree iff eta'^e1 == eta^e2
  return rat_pow(other.eta, e1) == rat_pow(eta, e2);
}

double Alpha::value() const {
  switch (kind) {
    case AlphaKind::MinusInf: return -std::numeric_limits<double>::infinity();
    case AlphaKind::PlusInf: return std::numeric_limits<double>::infinity();
    case AlphaKind::Finite: break;
  }
  if (k == 1) return 0.0;
  return std::log(static_cast<double>(k)) / std::log(rat_d(eta));
}

std::string Alpha::str() const {
  switch (kind) {
    case AlphaKind::MinusInf: return "-inf";
    case AlphaKind::PlusInf: return "+inf";
    case AlphaKind::Finite: break;
  }
  if (k == 1) return "0";
  return std::to_string(k) + "@" + rat_str(eta);
}

PointMassMeasure boundary_measure(const FractalString& s) {
  PointMassMeasure m;
  std::map<Rat, long long> at;
  for (const Interval& iv : s.intervals) {
    at[iv.lo] += 1;
    at[iv.hi] += 1;
  }
  m.atoms.reserve(at.size());
  m.mass.reserve(at.size());
  for (const auto& [p, c] : at) {
    m.atoms.push_back(p);
    m.mass.push_back(c);
  }
  m.boundary = s.boundary;
  m.piece_resolution = s.piece_resolution;
  m.zones = s.zones;
  m.gap_tail = s.gap_tail;
  m.length_tail = s.tail;
  m.generator = s.generator;
  return m;
}

long long PointMassMeasure::mass_in_closed(const Rat& lo, const Rat& hi) const {
  long long n = 0;
  auto it = std::lower_bound(atoms.begin(), atoms.end(), lo);
  for (; it != atoms.end() && *it <= hi; ++it) n += mass[it - atoms.begin()];
  return n;
}

Rat PointMassMeasure::plus_validity_threshold() const {
  Rat thr(0);
  for (const Zone& z : zones) thr = std::max(thr, z.theta);
  for (const PieceResolution& r : piece_resolution) thr = std::max(thr, r.unresolved_theta);
  return thr;
}

bool PointMassMeasure::has_accumulation_zones() const { return !zones.empty(); }

MassValue PointMassMeasure::measure_of(const Interval& u) const {
  // infinitely many atoms: the window interior meets a perfect piece, or the
  // window holds an accumulation point together with its approach side
  for (const auto& piece : boundary.pieces) {
    if (piece.intersects_open(u.lo, u.hi)) return {true, 0};
  }
  for (const auto& ap : boundary.accumulation_points) {
    bool inf = ap.atoms_on_right ? (u.lo <= ap.point && u.hi > ap.point)
                                 : (u.lo < ap.point && u.hi >= ap.point);
    if (inf) return {true, 0};
  }
  for (const Zone& z : zones) {
    if (u.hi > z.lo && u.lo < z.hi)
      throw UnsupportedError("window meets a zone whose atoms are not represented");
  }
  for (std::size_t i = 0; i < boundary.pieces.size(); ++i) {
    const auto& piece = boundary.pieces[i];
    Rat a = std::max(u.lo, piece.lo);
    Rat b = std::min(u.hi, piece.hi);
    if (a > b) continue;
    if (a == b) {
      // hull touched in a single point; fine unless it is a hidden corner
      bool realized = std::binary_search(atoms.begin(), atoms.end(), a);
      if (!realized && piece.contains_point(a) && u.contains(a))
        throw UnsupportedError("window touches the attractor at an unrepresented point");
      continue;
    }
    // (a, b) avoids the attractor, so it sits inside one complementary gap;
    // walk cells down to that gap and check it is resolved
    Rat x = (a + b) / 2;
    Rat cell_lo = piece.lo, cell_span = piece.span();
    Rat gap_len(0);
    while (true) {
      Rat child_span = cell_span / piece.base;
      bool descended = false;
      Rat prev_hi = cell_lo;
      for (const Rat& off : piece.offsets) {
        Rat c_lo = cell_lo + off * cell_span;
        Rat c_hi = c_lo + child_span;
        if (x >= c_lo && x <= c_hi) {
          cell_lo = c_lo;
          cell_span = child_span;
          descended = true;
          break;
        }
        if (x > prev_hi && x < c_lo) {
          gap_len = c_lo - prev_hi;
          break;
        }
        prev_hi = c_hi;
      }
      if (!descended) break;
    }
    if (gap_len < piece_resolution[i].resolved_gap_min)
      throw UnsupportedError("window meets an attractor gap below the resolved depth");
  }
  long long n = 0;
  auto it = std::lower_bound(atoms.begin(), atoms.end(), u.lo);
  for (; it != atoms.end() && *it <= u.hi; ++it) {
    if (u.contains(*it)) n += mass[it - atoms.begin()];
  }
  return {false, n};
}

Alpha regularity_of(const PointMassMeasure& m, const Interval& u) {
  if (u.is_point()) throw ValidationError("regularity needs a window of positive length");
  MassValue mv = m.measure_of(u);
  if (mv.infinite) return Alpha::minus_inf();
  if (mv.count == 0) return Alpha::plus_inf();
  return Alpha::finite(mv.count, u.length());
}

namespace {

// Starts whose window provably holds infinitely many atoms. Exact at every
// scale: attractor collars minus the interiors of gaps long enough to admit
// a window, plus the one-sided collars of each accumulation point.
IntervalSet minus_start_set(const PointMassMeasure& m, const Rat& eta) {
  Rat top = 1 - eta;
  std::vector<Interval> raw;
  for (const auto& piece : m.boundary.pieces) {
    IntervalSet s({Interval::open(piece.lo - eta, piece.hi)});
    std::vector<Interval> holes;
    piece.for_each_gap_at_least(eta, [&](const Rat& a, const Rat& b, int) {
      holes.push_back(Interval::closed(a, b - eta));
    });
    if (!holes.empty()) s = difference(s, IntervalSet(holes));
    for (const Interval& c : clamp_to(s, Rat(0), top).components()) raw.push_back(c);
  }
  for (const auto& ap : m.boundary.accumulation_points) {
    Rat lo = std::max(Rat(ap.point - eta), Rat(0));
    Rat hi = std::min(ap.point, top);
    if (lo > hi) continue;
    bool lo_closed = ap.atoms_on_right ? (lo > ap.point - eta) : true;
    bool hi_closed = ap.atoms_on_right ? true : (hi < ap.point);
    if (lo == hi && !(lo_closed && hi_closed)) continue;
    raw.push_back(Interval(lo, hi, lo_closed, hi_closed));
  }
  return IntervalSet(std::move(raw));
}

// Starts whose window overlaps territory with unrepresented atoms.
IntervalSet blocked_start_set(const PointMassMeasure& m, const Rat& eta) {
  Rat top = 1 - eta;
  std::vector<Interval> raw;
  for (const Zone& z : m.zones) {
    raw.push_back(Interval::open(z.lo - eta, z.hi));
  }
  for (std::size_t i = 0; i < m.boundary.pieces.size(); ++i) {
    const Rat& resolved = m.piece_resolution[i].resolved_gap_min;
    m.boundary.pieces[i].for_each_gap_at_least(eta, [&](const Rat& a, const Rat& b, int) {
      if (b - a < resolved) raw.push_back(Interval::closed(a, b - eta));
    });
  }
  return clamp_to(IntervalSet(std::move(raw)), Rat(0), top);
}

// Assemble {c in [0, 1-eta] : window atom count == target} from the realized
// atoms; the count function steps only at p - eta and p.
IntervalSet count_level_set(const PointMassMeasure& m, const Rat& eta, long long target) {
  Rat top = 1 - eta;
  std::vector<Rat> grid{Rat(0), top};
  for (const Rat& p : m.atoms) {
    Rat a = p - eta;
    if (a > 0 && a < top) grid.push_back(a);
    if (p > 0 && p < top) grid.push_back(p);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<long long> prefix(m.atoms.size() + 1, 0);
  for (std::size_t i = 0; i < m.atoms.size(); ++i) prefix[i + 1] = prefix[i] + m.mass[i];
  auto count_at = [&](const Rat& c) {
    auto lo = std::lower_bound(m.atoms.begin(), m.atoms.end(), c) - m.atoms.begin();
    auto hi = std::upper_bound(m.atoms.begin(), m.atoms.end(), Rat(c + eta)) - m.atoms.begin();
    return prefix[hi] - prefix[lo];
  };

  std::size_t items = 2 * grid.size() - 1;
  auto included = [&](std::size_t j) {
    if (j % 2 == 0) return count_at(grid[j / 2]) == target;
    return count_at((grid[j / 2] + grid[j / 2 + 1]) / 2) == target;
  };
  std::vector<Interval> raw;
  std::size_t j = 0;
  while (j < items) {
    if (!included(j)) {
      ++j;
      continue;
    }
    std::size_t f = j;
    while (j + 1 < items && included(j + 1)) ++j;
    Rat lo = grid[f / 2];
    Rat hi = (j % 2 == 0) ? grid[j / 2] : grid[j / 2 + 1];
    raw.push_back(Interval(lo, hi, f % 2 == 0, j % 2 == 0));
    ++j;
  }
  return IntervalSet(std::move(raw));
}

// Atom count the class (k0, eta0) dictates at scale eta: k0^t with
// eta == eta0^t, provided t is rational and the power is an integer.
std::optional<long long> count_at_scale(long long k0, const Rat& eta0, const Rat& eta) {
  if (k0 == 1) return 1;
  if (eta == eta0) return k0;
  double ratio = std::log(rat_d(eta)) / std::log(rat_d(eta0));
  for (long q = 1; q <= 64; ++q) {
    double pd = ratio * q;
    long p0 = std::lround(pd);
    for (long p : {p0 - 1, p0, p0 + 1}) {
      if (p < 1) continue;
      if (rat_pow(eta, q) != rat_pow(eta0, p)) continue;
      mpz_class kp;
      mpz_pow_ui(kp.get_mpz_t(), mpz_class(static_cast<long>(k0)).get_mpz_t(),
                 static_cast<unsigned long>(p));
      mpz_class r;
      if (mpz_root(r.get_mpz_t(), kp.get_mpz_t(), static_cast<unsigned long>(q)) == 0)
        return std::nullopt;
      if (!r.fits_slong_p()) return std::nullopt;
      return r.get_si();
    }
  }
  return std::nullopt;
}

}  // namespace

IntervalSet window_start_set(const PointMassMeasure& m, const Rat& eta, const Alpha& alpha) {
  if (!(eta > 0 && eta < 1)) throw ValidationError("window length must lie in (0, 1)");

  if (alpha.kind == AlphaKind::MinusInf) return minus_start_set(m, eta);

  if (alpha.kind == AlphaKind::Finite && m.has_accumulation_zones())
    throw UnsupportedError(
        "finite regularity against a measure with accumulation zones is not decidable from the "
        "truncation");

  Rat thr = m.plus_validity_threshold();
  if (eta < thr)
    throw ValidationError("scale " + rat_str(eta) + " is below the validity threshold " +
                          rat_str(thr));

  long long target = 0;
  if (alpha.kind == AlphaKind::Finite) {
    auto t = count_at_scale(alpha.k, alpha.eta, eta);
    if (!t) return IntervalSet();
    target = *t;
  }
  IntervalSet s = count_level_set(m, eta, target);
  s = difference(s, minus_start_set(m, eta));
  s = difference(s, blocked_start_set(m, eta));
  return s;
}

}  // namespace fz
