#pragma once

#include <variant>
#include <vector>

#include "fz/rational.hpp"

namespace fz {

struct LengthEntry {
  Rat length;
  long long mult = 0;
};

// Multiset of interval lengths. Normal form: sorted by decreasing length,
// equal lengths merged, zero multiplicities dropped.
struct LengthSystem {
  std::vector<LengthEntry> entries;

  void add(const Rat& length, long long mult = 1);
  void normalize();
  Rat total_length() const;
  long long total_count() const;
  bool empty() const { return entries.empty(); }
};

bool operator==(const LengthSystem& a, const LengthSystem& b);

// Continuation of a length multiset beyond the truncation horizon:
// entry j has length first_length * length_ratio^j and multiplicity
// first_mult * mult_ratio^j, j >= 0.
struct GeometricTail {
  Rat first_length;
  long long first_mult = 0;
  Rat length_ratio;  // in (0,1)
  long long mult_ratio = 1;
};

// Monotone block tail: lengths j^-a - (j+1)^-a for j >= first_index.
struct PowerTail {
  long a = 1;
  long first_index = 1;
};

using TailRule = std::variant<std::monostate, GeometricTail, PowerTail>;

inline bool has_tail(const TailRule& t) { return !std::holds_alternative<std::monostate>(t); }

}  // namespace fz
