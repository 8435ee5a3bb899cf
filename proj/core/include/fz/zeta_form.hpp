#pragma once

#include <complex>
#include <limits>
#include <optional>

#include "fz/length_system.hpp"

namespace fz {

using Cplx = std::complex<double>;

enum class ZetaKind { Finite, Lattice, Truncated };

// Closed ratio part scale^s * P(x) / Q(x) with x = base^-s, Q(0) = 1.
// The scale factor covers term families like 2 * (2/9) * 9^-n whose lengths
// are not plain powers of 1/base.
struct LatticePart {
  long base = 3;
  Rat scale = Rat(1);
  std::vector<Rat> num;  // P coefficients, index = power of x
  std::vector<Rat> den;  // Q coefficients, den[0] == 1
};

// Finite: the preamble is the whole (entire) function.
// Lattice: preamble + scale^s * P(x)/Q(x), meromorphic closed form.
// Truncated: honest partial sum of `series`, optionally with a tail rule
// that bounds the unrepresented remainder.
struct ZetaForm {
  ZetaKind kind = ZetaKind::Truncated;
  std::vector<std::pair<Rat, Rat>> preamble;  // (mult, length): sum of mult * length^s
  std::optional<LatticePart> lattice;
  LengthSystem series;
  TailRule series_tail;

  bool entire() const;
};

struct EvalResult {
  Cplx value{0.0, 0.0};
  double tail_bound = 0.0;  // bound on the omitted remainder; inf when unknown
};

EvalResult evaluate(const ZetaForm& z, Cplx s);

// Expand a lattice form back into its series and sum terms until the exact
// geometric tail bound drops below target_bound; the bound is reported.
EvalResult evaluate_lattice_series(const ZetaForm& z, Cplx s, double target_bound);

struct Abscissa {
  double sigma = -std::numeric_limits<double>::infinity();
  bool exact = true;         // false when estimated from a bare partial sum
  double uncertainty = 0.0;  // bracket width for estimated values
};

Abscissa abscissa_of_convergence(const ZetaForm& z);

}  // namespace fz
