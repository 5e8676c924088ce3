#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "steiner/design.hpp"

namespace steiner {

enum class BranchOrder {
  lexicographic,          ///< first uncovered s-subset in lexicographic order
  most_constrained_first  ///< s-subset with the fewest remaining candidate blocks
};

struct SearchConfig {
  std::uint64_t max_solutions = 1;
  std::chrono::milliseconds time_budget{10'000};
  BranchOrder branch_order = BranchOrder::most_constrained_first;
  /// Choose blocks together with their complements (n = 2k only).
  bool complement_closed = false;

  /// Throws DesignError when max_solutions is zero.
  void validate() const;
};

enum class SearchStatus {
  found,          ///< at least one design; may be fewer than max_solutions if exhausted
  unsatisfiable,  ///< search space exhausted with no design
  timeout         ///< budget ran out before max_solutions designs or exhaustion
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::unsatisfiable;
  std::vector<Design> designs;
  /// True when the whole search tree was explored.
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

/// Steiner systems S(s,k,n) by exact cover of all s-subsets with k-subsets.
SearchOutcome exact_cover_build(const DesignParams& params, const SearchConfig& cfg);

/// Completions of `partial` to a Steiner system containing all its blocks.
/// A partial design that already covers some s-subset twice is reported as
/// unsatisfiable without searching.
SearchOutcome complete_partial(const Design& partial, const SearchConfig& cfg);

/// A point bijection pi (pi[i] is the image of point i) mapping the blocks of
/// `from` onto the blocks of `to`, or nothing when the designs are not
/// isomorphic. Deterministic: candidate images are tried in ascending order.
std::optional<std::vector<PointId>> isomorphic(const Design& from, const Design& to);

/// True when `pi` maps the blocks of `from` exactly onto those of `to`.
bool is_isomorphism(const Design& from, const Design& to, const std::vector<PointId>& pi);

}  // namespace steiner
