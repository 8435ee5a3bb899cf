#pragma once

#include <optional>
#include <string>

#include "fz/boundary.hpp"
#include "fz/length_system.hpp"

namespace fz {

enum class Generator { Cantor, Reordered, Paired, AString, Custom };

const char* generator_name(Generator g);

// Continuation of the gap multiset for self-similar gap families:
// gap j has length first_gap * gap_ratio^j, multiplicity first_mult * mult_ratio^j.
struct GapTail {
  Rat first_gap;
  long long first_mult = 0;
  Rat gap_ratio;
  long long mult_ratio = 1;
};

// Open subset of [0,1] given by disjoint open intervals, truncated at a finite
// depth, together with the symbolic data describing what the truncation hides.
struct FractalString {
  Generator generator = Generator::Custom;
  int depth = 0;
  long a_param = 0;  // only for the a-string family

  std::vector<Interval> intervals;  // open, disjoint, sorted by left endpoint
  LengthSystem lengths;             // realized length multiset
  TailRule tail;                    // continuation of the length multiset
  std::optional<GapTail> gap_tail;  // continuation of the gap multiset

  BoundaryModel boundary;
  std::vector<PieceResolution> piece_resolution;  // parallel to boundary.pieces
  std::vector<Zone> zones;
  Rat min_represented_length;

  Rat realized_length() const;
};

FractalString make_cantor_string(int depth);     // depth in [1, 12]
FractalString make_reordered_cantor(int depth);  // depth in [1, 12]
FractalString make_paired_cantor(int depth);     // even depth in [2, 12]
FractalString make_a_string(long a, int depth);  // a >= 1, depth in [1, 2000000]

// V(eps) = sum_j min(l_j, 2 eps) over the full system, represented lengths
// plus the symbolic tail, exactly in rational arithmetic.
Rat tube_volume(const FractalString& s, const Rat& eps);

// Maximal runs of pairwise-adjacent intervals. A run bordered by a zone
// extends through it to the accumulation point, so its span includes the
// unrepresented atoms' territory.
struct GapRun {
  Rat left;
  Rat right;
};

struct GapSystem {
  LengthSystem gaps;             // run span lengths with multiplicity
  std::vector<GapRun> runs;      // realized runs after zone extension
  std::optional<GapTail> tail;   // continuation for self-similar gap families
};

GapSystem gap_lengths(const FractalString& s);

double hausdorff_dimension(const FractalString& s);

}  // namespace fz
