#pragma once

#include "fz/fractal_string.hpp"
#include "fz/zeta_form.hpp"

namespace fz {

struct Pole {
  Cplx s;
  Cplx residue{0.0, 0.0};
  bool simple = true;
  bool ring_validated = false;
};

// Vertical line of poles Re s = sigma with arithmetic spacing in Im s.
struct PoleLine {
  double sigma = 0.0;
  double spacing = 0.0;  // 2 pi / log base
  double phase = 0.0;    // Im of the m = 0 member
  std::vector<Pole> poles;
};

struct Window {
  double sigma_min = 0.0;
  double t_max = 10.0;
};

struct ComplexDimensions {
  std::vector<PoleLine> lines;
};

// Pole lines of a meromorphic form inside the window, with residues at simple
// poles validated by a shrinking-ring check around each pole.
ComplexDimensions complex_dimensions(const ZetaForm& z, const Window& w);

// Geometric zeta of the string's full length system: lattice closed form for
// geometric tails, truncated form with a power tail for a-strings.
ZetaForm geometric_zeta_form(const FractalString& s);

struct MinkowskiReport {
  double dimension = 0.0;
  bool dimension_exact = false;
  bool measurable = false;
  double content = 0.0;        // when measurable
  double content_lower = 0.0;  // otherwise: range of V(eps) eps^(D-1) over one period
  double content_upper = 0.0;
  double l_limit = 0.0;        // lim l_j j^(1/D) when it exists
  bool l_limit_exists = false;
};

MinkowskiReport minkowski_report(const FractalString& s);

struct TubeExplicit {
  double value = 0.0;
  double tail_estimate = 0.0;  // size estimate of the dropped pole-sum tail
};

// Pointwise tube-volume formula: sum over the enumerated poles (|m| <= m_max
// on each line) of res * (2 eps)^(1-w) / (w (1-w)), plus the 2 eps * z(0)
// term from the pole of the integrand at the origin.
TubeExplicit tube_explicit_formula(const ZetaForm& z, const Rat& eps, int m_max);

}  // namespace fz
