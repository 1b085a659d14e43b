#include "moonshine/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace moonshine {

CyclePermutation CyclePermutation::from_one_line(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  std::vector<bool> seen(image.size(), false);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[i]; i = image[i]) {
      if (i < 0 || i >= n) throw std::invalid_argument("permutation: image out of range");
      seen[i] = true;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  return from_cycles(std::move(cycles));
}

CyclePermutation CyclePermutation::from_cycles(std::vector<std::vector<int>> cycles) {
  CyclePermutation p;
  for (auto& c : cycles) {
    if (c.size() < 2) throw std::invalid_argument("permutation: fixed point present");
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    p.n_ += static_cast<int>(c.size());
  }
  std::sort(cycles.begin(), cycles.end());
  p.cycles_ = std::move(cycles);
  return p;
}

std::vector<int> CyclePermutation::one_line() const {
  std::vector<int> image(static_cast<std::size_t>(n_), -1);
  for (const auto& c : cycles_)
    for (std::size_t i = 0; i < c.size(); ++i) image[c[i]] = c[(i + 1) % c.size()];
  return image;
}

std::string CyclePermutation::to_text() const {
  std::string out;
  for (const auto& c : cycles_) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(c[i] + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

void derange(int pos, std::vector<int>& image, std::vector<bool>& used,
             const std::function<void(const CyclePermutation&)>& fn) {
  const int n = static_cast<int>(image.size());
  if (pos == n) {
    fn(CyclePermutation::from_one_line(image));
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (v == pos || used[v]) continue;
    used[v] = true;
    image[pos] = v;
    derange(pos + 1, image, used, fn);
    used[v] = false;
  }
}

}  // namespace

void for_each_derangement(int n, const std::function<void(const CyclePermutation&)>& fn) {
  if (n < 0) throw std::invalid_argument("derangements: n < 0");
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  derange(0, image, used, fn);
}

std::vector<CyclePermutation> enum_derangements(int n) {
  std::vector<CyclePermutation> out;
  for_each_derangement(n, [&](const CyclePermutation& p) { out.push_back(p); });
  return out;
}

}  // namespace moonshine
