#pragma once

// Reference computations for tests. Everything here works on sorted
// std::vector<int> label lists and deliberately avoids the library's bitset
// machinery, so agreement between the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "steiner/design.hpp"

namespace steiner::testing {

using Labels = std::vector<int>;

inline std::vector<Labels> blocks_as_labels(const Design& d) {
  std::vector<Labels> out;
  for (Block b : d.blocks()) out.push_back(b.labels());
  return out;
}

/// C(n, i) from Pascal's triangle.
inline std::uint64_t pascal(int n, int i) {
  std::vector<std::vector<std::uint64_t>> row(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) {
    row[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(a) + 1, 1);
    for (int b = 1; b < a; ++b) {
      row[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          row[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
          row[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    }
  }
  if (i < 0 || i > n) return 0;
  return row[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

/// All i-subsets of {1..n} by recursion, lexicographic.
inline std::vector<Labels> all_subsets(int n, int i) {
  std::vector<Labels> out;
  Labels current;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(current.size()) == i) {
      out.push_back(current);
      return;
    }
    for (int v = next; v <= n; ++v) {
      current.push_back(v);
      rec(v + 1);
      current.pop_back();
    }
  };
  rec(1);
  return out;
}

inline bool includes(const Labels& big, const Labels& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline int intersection_size(const Labels& a, const Labels& b) {
  Labels out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return static_cast<int>(out.size());
}

/// Number of blocks through each i-subset.
inline std::vector<std::uint64_t> coverage_counts(const std::vector<Labels>& blocks, int n, int i) {
  std::vector<std::uint64_t> out;
  for (const auto& s : all_subsets(n, i)) {
    std::uint64_t c = 0;
    for (const auto& b : blocks) c += includes(b, s) ? 1 : 0;
    out.push_back(c);
  }
  return out;
}

/// Intersection sizes of block `index` with every other block.
inline std::map<int, int> block_row(const std::vector<Labels>& blocks, std::size_t index) {
  std::map<int, int> row;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j != index) ++row[intersection_size(blocks[index], blocks[j])];
  }
  return row;
}

inline bool is_subset_of_ground(const Labels& b, int n) {
  return std::all_of(b.begin(), b.end(), [&](int v) { return v >= 1 && v <= n; });
}

inline Labels complement_labels(const Labels& b, int n) {
  Labels out;
  for (int v = 1; v <= n; ++v) {
    if (!std::binary_search(b.begin(), b.end(), v)) out.push_back(v);
  }
  return out;
}

}  // namespace steiner::testing
