#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "steiner/design.hpp"

namespace steiner {

/// Covering number lambda_i for each 0 <= i <= s. An entry is empty when the
/// count of blocks through an i-subset is not the same for all i-subsets.
using CoveringNumbers = std::vector<std::optional<std::uint64_t>>;

struct VerificationReport {
  bool is_steiner = false;
  std::vector<PointSet> uncovered;
  std::vector<PointSet> multiply_covered;
  CoveringNumbers covering_numbers;
  /// Empty when the design is not of the n = 2k shape where complements are blocks.
  std::optional<bool> complement_closed;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Histogram of |b1 & b2| over unordered pairs of distinct blocks.
struct IntersectionSpectrum {
  std::map<int, std::uint64_t> histogram;

  std::uint64_t total_pairs() const;
  friend bool operator==(const IntersectionSpectrum&, const IntersectionSpectrum&) = default;
};

/// Exhaustive coverage scan of all C(n, s) s-subsets.
VerificationReport verify_steiner(const Design& d);

/// Exhaustive count over every i-subset, i = 0..s.
CoveringNumbers covering_numbers(const Design& d);

IntersectionSpectrum intersection_spectrum(const Design& d);

/// Row of the spectrum seen from one block: how many other blocks meet it in
/// i points, indexed by i = 0..k.
std::vector<std::uint64_t> block_intersection_row(const Design& d, std::size_t block_index);

/// Requires n = 2k; throws DesignError otherwise.
bool is_complement_closed(const Design& d);

/// Blocks through `p` with `p` removed, relabelled order-preservingly onto
/// 1..n-1, with parameters (s-1, k-1, n-1).
Design derive(const Design& d, PointId p);

}  // namespace steiner
