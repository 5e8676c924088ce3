#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steiner/design.hpp"

namespace steiner {

enum class Color { red, blue };

/// Total Red/Blue assignment over v1..vn.
class Coloring {
 public:
  Coloring(int n, PointSet red);

  /// One character per point, 'R' or 'B'; length fixes n.
  static Coloring parse(std::string_view rb);

  int points() const { return n_; }
  PointSet red() const { return red_; }
  PointSet blue() const { return PointSet::full(n_) - red_; }
  int red_count() const { return red_.size(); }
  Color at(PointId p) const { return red_.contains(p) ? Color::red : Color::blue; }

  /// Same partition with the colors exchanged.
  Coloring flipped() const { return Coloring(n_, blue()); }

  std::string to_string() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int n_;
  PointSet red_;
};

struct ColoringReport {
  bool proper = false;
  std::vector<Block> monochromatic_blocks;
  int red_count = 0;

  friend bool operator==(const ColoringReport&, const ColoringReport&) = default;
};

/// Throws DesignError if the coloring is not defined on exactly 1..n.
ColoringReport check_coloring(const Design& d, const Coloring& c);

/// First monochromatic block in canonical order.
std::optional<Block> mono_witness(const Design& d, const Coloring& c);

/// Red = lexicographically smallest k-subset that is not a block, Blue = rest.
///
/// Proper whenever the design is complement-closed on n = 2k points: a
/// monochromatic block would equal the Red set or its complement, and neither
/// is a block. Throws DesignError when those preconditions fail or every
/// k-subset is a block.
Coloring lemma1_coloring(const Design& d);

/// Largest ground set accepted by exhaustive 2^n enumeration.
inline constexpr int kMaxEnumerationPoints = 24;

/// Proper colorings tallied by number of Red points.
struct ColoringCensus {
  std::uint64_t total = 0;
  /// Index r = number of Red points, 0..n.
  std::vector<std::uint64_t> by_red_count;
};

/// Exact count over all 2^n assignments. Throws DesignError above 24 points.
std::uint64_t count_proper_colorings(const Design& d);
ColoringCensus proper_coloring_census(const Design& d);

}  // namespace steiner
