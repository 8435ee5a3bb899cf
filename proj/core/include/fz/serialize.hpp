#pragma once

#include <string>

#include "fz/multiscale.hpp"
#include "fz/partition.hpp"
#include "fz/zeta.hpp"

namespace fz {

// 12 significant digits, deterministic across runs (fixed locale, -0 folded).
std::string format_real(double v);

std::string string_to_json(const FractalString& s);
FractalString string_from_json(const std::string& text);

std::string mzf_to_json(const MzfResult& r, bool with_stages);
std::string stages_to_csv(const MzfResult& r);

std::string dims_to_json(const ComplexDimensions& d);
std::string dims_to_csv(const ComplexDimensions& d);

struct TubeRow {
  Rat eps;
  Rat volume;
  double explicit_value = 0.0;
  bool has_explicit = false;
};
std::string tube_to_csv(const std::vector<TubeRow>& rows);
std::string tube_to_json(const std::vector<TubeRow>& rows);

std::string spectrum_to_csv(const std::vector<SpectrumPoint>& pts);
std::string spectrum_to_json(const std::vector<SpectrumPoint>& pts);

// Human-readable polynomial in x, e.g. "1-2x" or "2x^3".
std::string poly_str(const std::vector<Rat>& coeffs);

std::string interval_str(const Interval& iv);
std::string interval_set_str(const IntervalSet& s);

}  // namespace fz
