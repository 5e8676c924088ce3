#include "steiner/coloring.hpp"

#include <algorithm>

#include "steiner/verification.hpp"

namespace steiner {

Coloring::Coloring(int n, PointSet red) : n_(n), red_(red) {
  if (n < 1 || n > kMaxPoints) throw DesignError("coloring size out of range");
  if (!PointSet::full(n).contains(red)) throw DesignError("coloring has Red points outside 1..n");
}

Coloring Coloring::parse(std::string_view rb) {
  while (!rb.empty() && (rb.back() == '\n' || rb.back() == '\r')) rb.remove_suffix(1);
  if (rb.empty() || rb.size() > static_cast<std::size_t>(kMaxPoints)) {
    throw DesignError("coloring must have 1..64 characters over {R,B}");
  }
  PointSet red;
  for (std::size_t i = 0; i < rb.size(); ++i) {
    if (rb[i] == 'R') {
      red.insert(PointId::from_index(static_cast<int>(i)));
    } else if (rb[i] != 'B') {
      throw DesignError("coloring character '" + std::string(1, rb[i]) + "' at position " +
                        std::to_string(i + 1) + " is not R or B");
    }
  }
  return Coloring(static_cast<int>(rb.size()), red);
}

std::string Coloring::to_string() const {
  std::string out(static_cast<std::size_t>(n_), 'B');
  for (PointId p : red_.points()) out[static_cast<std::size_t>(p.index())] = 'R';
  return out;
}

namespace {

void require_total(const Design& d, const Coloring& c) {
  if (c.points() != d.points()) {
    throw DesignError("coloring covers " + std::to_string(c.points()) + " points, design has " +
                      std::to_string(d.points()));
  }
}

bool monochromatic(Block b, PointSet red, PointSet blue) {
  return red.contains(b) || blue.contains(b);
}

}  // namespace

ColoringReport check_coloring(const Design& d, const Coloring& c) {
  require_total(d, c);
  ColoringReport report;
  report.red_count = c.red_count();
  const PointSet red = c.red();
  const PointSet blue = c.blue();
  for (Block b : d.blocks()) {
    if (monochromatic(b, red, blue)) report.monochromatic_blocks.push_back(b);
  }
  report.proper = report.monochromatic_blocks.empty();
  return report;
}

std::optional<Block> mono_witness(const Design& d, const Coloring& c) {
  require_total(d, c);
  const PointSet red = c.red();
  const PointSet blue = c.blue();
  for (Block b : d.blocks()) {
    if (monochromatic(b, red, blue)) return b;
  }
  return std::nullopt;
}

Coloring lemma1_coloring(const Design& d) {
  if (!is_complement_closed(d)) {
    throw DesignError("lemma1_coloring needs a complement-closed design");
  }
  for (PointSet candidate : enumerate_subsets(d.points(), d.block_size())) {
    if (!d.contains(candidate)) return Coloring(d.points(), candidate);
  }
  throw DesignError("every " + std::to_string(d.block_size()) +
                    "-subset is a block; no non-block to color Red");
}

ColoringCensus proper_coloring_census(const Design& d) {
  const int n = d.points();
  if (n > kMaxEnumerationPoints) {
    throw DesignError("exhaustive coloring count supports n <= " +
                      std::to_string(kMaxEnumerationPoints) + ", got n=" + std::to_string(n) +
                      "; a sampling mode would be needed");
  }
  ColoringCensus census;
  census.by_red_count.assign(static_cast<std::size_t>(n) + 1, 0);
  const auto blocks = d.blocks();
  const std::uint64_t all = PointSet::full(n).bits();
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    const PointSet red(mask);
    const PointSet blue(all & ~mask);
    const bool proper = std::none_of(blocks.begin(), blocks.end(),
                                     [&](Block b) { return monochromatic(b, red, blue); });
    if (proper) {
      ++census.total;
      ++census.by_red_count[static_cast<std::size_t>(red.size())];
    }
  }
  return census;
}

std::uint64_t count_proper_colorings(const Design& d) { return proper_coloring_census(d).total; }

}  // namespace steiner
