#include "fz/fractal_string.hpp"

#include <algorithm>
#include <set>

namespace fz {

namespace {

Rat p3(long k) { return rat_pow(Rat(1, 3), k); }

Rat inv_pow(long j, long a) { return rat_pow(Rat(1, j), a); }

void check_depth(int depth, int lo, int hi) {
  if (depth < lo || depth > hi)
    throw ValidationError("depth " + std::to_string(depth) + " outside [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
}

void sort_intervals(std::vector<Interval>& v) {
  std::sort(v.begin(), v.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
}

void lengths_from_intervals(FractalString& s) {
  for (const Interval& iv : s.intervals) s.lengths.add(iv.hi - iv.lo);
  s.lengths.normalize();
}

void fill_isolated_points(FractalString& s) {
  std::set<Rat> pts;
  for (const Interval& iv : s.intervals) {
    pts.insert(iv.lo);
    pts.insert(iv.hi);
  }
  for (const Rat& p : pts) {
    bool on_piece = false;
    for (const auto& piece : s.boundary.pieces)
      if (piece.contains_point(p)) {
        on_piece = true;
        break;
      }
    if (!on_piece) s.boundary.isolated_points.push_back(p);
  }
}

}  // namespace

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::Cantor: return "cantor";
    case Generator::Reordered: return "reordered";
    case Generator::Paired: return "paired";
    case Generator::AString: return "a-string";
    case Generator::Custom: return "custom";
  }
  return "custom";
}

Rat FractalString::realized_length() const { return lengths.total_length(); }

FractalString make_cantor_string(int depth) {
  check_depth(depth, 1, 12);
  FractalString s;
  s.generator = Generator::Cantor;
  s.depth = depth;

  SelfSimilarSet piece{Rat(0), Rat(1), 3, {Rat(0), Rat(2, 3)}};
  piece.for_each_gap_at_least(p3(depth), [&](const Rat& a, const Rat& b, int) {
    s.intervals.push_back(Interval::open(a, b));
  });
  sort_intervals(s.intervals);
  lengths_from_intervals(s);

  s.tail = GeometricTail{p3(depth + 1), 1LL << depth, Rat(1, 3), 2};
  s.gap_tail = GapTail{p3(depth + 1), 1LL << depth, Rat(1, 3), 2};
  s.boundary.pieces.push_back(piece);
  s.piece_resolution.push_back({p3(depth), p3(depth + 1), p3(depth + 1)});
  s.min_represented_length = p3(depth);
  fill_isolated_points(s);
  return s;
}

FractalString make_reordered_cantor(int depth) {
  check_depth(depth, 1, 12);
  FractalString s;
  s.generator = Generator::Reordered;
  s.depth = depth;

  // block n fills ((2/3)^n, (2/3)^(n-1)) with 2^(n-1) pieces of length 3^-n,
  // deepest block first so the list is sorted
  for (int n = depth; n >= 1; --n) {
    Rat lo = rat_pow(Rat(2, 3), n);
    Rat step = p3(n);
    long parts = 1L << (n - 1);
    for (long j = 0; j < parts; ++j) {
      s.intervals.push_back(Interval::open(lo + j * step, lo + (j + 1) * step));
    }
  }
  lengths_from_intervals(s);

  s.tail = GeometricTail{p3(depth + 1), 1LL << depth, Rat(1, 3), 2};
  s.boundary.accumulation_points.push_back({Rat(0), true});
  s.zones.push_back({Rat(0), rat_pow(Rat(2, 3), depth), p3(depth + 1)});
  s.min_represented_length = p3(depth);
  fill_isolated_points(s);
  return s;
}

FractalString make_paired_cantor(int depth) {
  check_depth(depth, 2, 12);
  if (depth % 2 != 0) throw ValidationError("paired construction needs an even depth");
  FractalString s;
  s.generator = Generator::Paired;
  s.depth = depth;

  int levels = depth / 2;
  SelfSimilarSet piece{Rat(0), Rat(4, 7), 9, {Rat(0), Rat(8, 9)}};

  // each attractor gap of level n (length 4*9^-n) takes a pair of lengths
  // 3^-(2n-1) and 3^-2n sharing the split point
  std::vector<long long> used(depth + 1, 0);
  Rat min_gap = 4 * rat_pow(Rat(1, 9), levels);
  piece.for_each_gap_at_least(min_gap, [&](const Rat& a, const Rat& b, int level) {
    Rat mid = a + p3(2 * level - 1);
    s.intervals.push_back(Interval::open(a, mid));
    s.intervals.push_back(Interval::open(mid, b));
    used[2 * level - 1] += 1;
    used[2 * level] += 1;
  });

  // remaining multiplicities pack adjacently to the right of the attractor
  Rat cursor(4, 7);
  for (int k = 1; k <= depth; ++k) {
    long rest = (1L << (k - 1)) - static_cast<long>(used[k]);
    for (long j = 0; j < rest; ++j) {
      Rat next = cursor + p3(k);
      s.intervals.push_back(Interval::open(cursor, next));
      cursor = next;
    }
  }
  sort_intervals(s.intervals);
  lengths_from_intervals(s);

  s.tail = GeometricTail{p3(depth + 1), 1LL << depth, Rat(1, 3), 2};
  s.gap_tail = GapTail{4 * p3(depth + 2), 1LL << levels, Rat(1, 9), 2};
  s.boundary.pieces.push_back(piece);
  s.boundary.accumulation_points.push_back({Rat(1), false});
  s.zones.push_back({cursor, Rat(1), p3(depth + 1)});
  s.piece_resolution.push_back({4 * p3(depth), 4 * p3(depth + 2), p3(depth + 1)});
  s.min_represented_length = p3(depth);
  fill_isolated_points(s);
  return s;
}

FractalString make_a_string(long a, int depth) {
  if (a < 1) throw ValidationError("a must be at least 1");
  check_depth(depth, 1, 2000000);
  FractalString s;
  s.generator = Generator::AString;
  s.depth = depth;
  s.a_param = a;

  s.intervals.reserve(depth);
  for (long j = depth; j >= 1; --j) {
    s.intervals.push_back(Interval::open(inv_pow(j + 1, a), inv_pow(j, a)));
  }
  lengths_from_intervals(s);

  s.tail = PowerTail{a, static_cast<long>(depth) + 1};
  Rat edge = inv_pow(depth + 1, a);
  s.boundary.accumulation_points.push_back({Rat(0), true});
  s.zones.push_back({Rat(0), edge, edge - inv_pow(depth + 2, a)});
  s.min_represented_length = inv_pow(depth, a) - edge;
  fill_isolated_points(s);
  return s;
}

Rat tube_volume(const FractalString& s, const Rat& eps) {
  if (eps <= 0) throw ValidationError("tube radius must be positive");
  Rat two_eps = 2 * eps;
  Rat v(0);
  for (const auto& e : s.lengths.entries) v += static_cast<long>(e.mult) * std::min(e.length, two_eps);

  if (const auto* gt = std::get_if<GeometricTail>(&s.tail)) {
    Rat q = gt->mult_ratio * gt->length_ratio;
    if (q >= 1) throw ValidationError("tail length does not converge");
    Rat l = gt->first_length;
    Rat m(static_cast<long>(gt->first_mult));
    while (l > two_eps) {
      v += m * two_eps;
      l *= gt->length_ratio;
      m *= static_cast<long>(gt->mult_ratio);
    }
    v += m * l / (Rat(1) - q);
  } else if (const auto* pt = std::get_if<PowerTail>(&s.tail)) {
    auto len_at = [&](long j) { return inv_pow(j, pt->a) - inv_pow(j + 1, pt->a); };
    long fi = pt->first_index;
    if (len_at(fi) <= two_eps) {
      v += inv_pow(fi, pt->a);
    } else {
      long lo = fi, hi = fi + 1;
      while (len_at(hi) > two_eps) {
        lo = hi;
        hi *= 2;
      }
      // largest index whose length still exceeds the window
      while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        (len_at(mid) > two_eps ? lo : hi) = mid;
      }
      v += (lo - fi + 1) * two_eps + inv_pow(lo + 1, pt->a);
    }
  }
  return v;
}

GapSystem gap_lengths(const FractalString& s) {
  GapSystem g;
  for (const Interval& iv : s.intervals) {
    if (!g.runs.empty() && g.runs.back().right == iv.lo) {
      g.runs.back().right = iv.hi;
    } else {
      g.runs.push_back({iv.lo, iv.hi});
    }
  }
  for (auto& run : g.runs) {
    for (const Zone& z : s.zones) {
      if (run.right == z.lo) run.right = z.hi;
      if (run.left == z.hi) run.left = z.lo;
    }
  }
  for (const auto& run : g.runs) g.gaps.add(run.right - run.left);
  g.gaps.normalize();
  g.tail = s.gap_tail;
  return g;
}

double hausdorff_dimension(const FractalString& s) {
  double d = 0.0;
  for (const auto& piece : s.boundary.pieces) d = std::max(d, piece.dimension());
  return d;
}

}  // namespace fz
