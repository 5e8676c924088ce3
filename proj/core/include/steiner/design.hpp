#pragma once

#include <span>
#include <vector>

#include "steiner/point_set.hpp"

namespace steiner {

/// A block (hyperedge) is a point set; the owning design fixes its size.
using Block = PointSet;

/// Parameters of S(strength, block_size, points).
struct DesignParams {
  int strength = 0;
  int block_size = 0;
  int points = 0;

  /// Throws DesignError unless 0 < s < k < n <= 64.
  void validate() const;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// Immutable k-uniform block collection in canonical (lexicographic) order.
///
/// Construction validates every block against the parameters and rejects
/// duplicates; nothing is silently dropped.
class Design {
 public:
  Design(DesignParams params, std::vector<Block> blocks);

  const DesignParams& params() const { return params_; }
  int strength() const { return params_.strength; }
  int block_size() const { return params_.block_size; }
  int points() const { return params_.points; }

  std::span<const Block> blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  /// Binary search over the canonical order.
  bool contains(Block b) const;

  friend bool operator==(const Design&, const Design&) = default;

 private:
  DesignParams params_;
  std::vector<Block> blocks_;
};

/// Canonical block from 1-based labels. Rejects out-of-range and repeated points.
Block make_block(std::span<const int> one_based, int n);
Block make_block(std::initializer_list<int> one_based, int n);

/// Set complement within {v1..vn}.
Block complement_block(Block b, int n);

/// A point set A together with a family B of subsets; each member of B is
/// joined with A to form one block.
struct ExpansionRow {
  PointSet a_set;
  std::vector<PointSet> b_family;

  friend bool operator==(const ExpansionRow&, const ExpansionRow&) = default;
};

/// One block A | m per member m of the family, in family order.
std::vector<Block> cartesian_union(const ExpansionRow& row, int k);

/// Image of a design under a point permutation. `image[i]` is the new 0-based
/// index of point i.
Design relabel(const Design& d, std::span<const int> image);

}  // namespace steiner
