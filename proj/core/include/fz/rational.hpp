#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace fz {

// Exact rational scalar. All set algebra and sweep geometry runs on these;
// doubles only appear at the analytic layer (zeta evaluation, abscissas).
using Rat = mpq_class;

// Bad user input: malformed rationals, scales out of range, depth mismatches.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally sound request the engine refuses to answer inexactly
// (e.g. finite-regularity sweeps on measures with unresolved atom tails).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// gmpxx stops at long; route long long through it so counts mix freely
inline Rat operator*(const Rat& a, long long b) { return Rat(a * static_cast<long>(b)); }
inline Rat operator*(long long a, const Rat& b) { return Rat(static_cast<long>(a) * b); }
inline Rat operator+(const Rat& a, long long b) { return Rat(a + static_cast<long>(b)); }
inline Rat operator-(const Rat& a, long long b) { return Rat(a - static_cast<long>(b)); }

// Accepts "p", "-p", "p/q". Returns nullopt on malformed text or q == 0.
std::optional<Rat> parse_rat(const std::string& text);

// Canonical "p/q" (or "p" for integers); inverse of parse_rat.
std::string rat_str(const Rat& r);

inline double rat_d(const Rat& r) { return r.get_d(); }

// base^e with integer e; negative e requires base != 0.
Rat rat_pow(const Rat& base, long e);

// Smallest n >= 0 with value * base^n >= 1, for value in (0, 1], base >= 2.
long ceil_neg_log(const Rat& value, long base);

}  // namespace fz
