#pragma once

#include <vector>

#include "fz/zeta_form.hpp"

namespace fz {

// Ternary binomial family with weights (1/3, 2/3): stage n offers windows of
// size 3^-(n k2); a window qualifies when n k1 of its n k2 digits carry the
// light weight. The partition zeta sums C(n k2, n k1) 3^-(n k2 s) over n >= 1.
struct PartitionFamily {
  long long k1 = 1;
  long long k2 = 2;  // reduced fraction, 0 < k1 < k2
};

EvalResult partition_zeta(const PartitionFamily& f, Cplx s, int n_terms);

// Abscissa of convergence: binary-entropy closed form H(k1/k2) / log 3.
double partition_abscissa(const PartitionFamily& f);

// Same value located by bracketing the divergence of log-space partial sums.
double partition_abscissa_bisect(const PartitionFamily& f);

// q-weighted zeta over all ternary windows, integer q: closed lattice form
// 1 / (1 - ((1/3)^q + (2/3)^q) x) with x = 3^-s.
ZetaForm modified_mzf(long q);

// Pole-line abscissa sigma(q) of the q-weighted zeta, by bracketing on [-10, 10].
double sigma_of_q(double q);

// Reference closed form log3((1/3)^q + (2/3)^q).
double sigma_of_q_closed(double q);

struct SpectrumPoint {
  long long k1 = 0, k2 = 0;
  double alpha = 0.0;  // window regularity of the k1/k2 family
  double f = 0.0;      // partition-zeta abscissa at that regularity
};

// All reduced fractions k1/k2 in (0,1) with k2 <= k_max, sorted by alpha.
std::vector<SpectrumPoint> spectrum_from_partition(long long k_max);

}  // namespace fz
