#include "fz/length_system.hpp"

#include <algorithm>

namespace fz {

void LengthSystem::add(const Rat& length, long long mult) {
  if (length <= 0) throw ValidationError("lengths must be positive");
  if (mult <= 0) throw ValidationError("multiplicities must be positive");
  entries.push_back({length, mult});
}

void LengthSystem::normalize() {
  std::sort(entries.begin(), entries.end(),
            [](const LengthEntry& a, const LengthEntry& b) { return a.length > b.length; });
  std::vector<LengthEntry> merged;
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().length == e.length)
      merged.back().mult += e.mult;
    else
      merged.push_back(std::move(e));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const LengthEntry& e) { return e.mult == 0; }),
               merged.end());
  entries = std::move(merged);
}

Rat LengthSystem::total_length() const {
  Rat sum(0);
  for (const auto& e : entries) sum += e.length * static_cast<long>(e.mult);
  return sum;
}

long long LengthSystem::total_count() const {
  long long n = 0;
  for (const auto& e : entries) n += e.mult;
  return n;
}

bool operator==(const LengthSystem& a, const LengthSystem& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].length != b.entries[i].length || a.entries[i].mult != b.entries[i].mult)
      return false;
  }
  return true;
}

}  // namespace fz
