#pragma once

// Fixed-point-free permutations stored as cycle decompositions.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace moonshine {

class CyclePermutation {
 public:
  CyclePermutation() = default;
  /// From one-line notation over {0..n-1}; throws if a fixed point is present.
  static CyclePermutation from_one_line(const std::vector<int>& image);
  /// From cycles over {0..n-1}; each cycle is rotated to start at its minimum
  /// and cycles are ordered by that minimum.
  static CyclePermutation from_cycles(std::vector<std::vector<int>> cycles);

  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  int size() const { return n_; }
  int cycle_count() const { return static_cast<int>(cycles_.size()); }
  /// image[i] = sigma(i).
  std::vector<int> one_line() const;
  /// "(1 2)(3 4)" with 1-based elements.
  std::string to_text() const;

  friend bool operator==(const CyclePermutation&, const CyclePermutation&) = default;
  friend auto operator<=>(const CyclePermutation& a, const CyclePermutation& b) { return a.cycles_ <=> b.cycles_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> cycles_;
};

/// Every permutation of {0..n-1} whose cycles all have length >= 2, once each,
/// in lexicographic order of the one-line notation.
void for_each_derangement(int n, const std::function<void(const CyclePermutation&)>& fn);
std::vector<CyclePermutation> enum_derangements(int n);

}  // namespace moonshine
