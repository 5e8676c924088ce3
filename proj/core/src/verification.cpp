#include "steiner/verification.hpp"

#include <algorithm>

namespace steiner {

namespace {

std::uint64_t blocks_through(const Design& d, PointSet subset) {
  std::uint64_t count = 0;
  for (Block b : d.blocks()) count += b.contains(subset) ? 1 : 0;
  return count;
}

}  // namespace

std::uint64_t IntersectionSpectrum::total_pairs() const {
  std::uint64_t total = 0;
  for (const auto& [size, count] : histogram) total += count;
  return total;
}

VerificationReport verify_steiner(const Design& d) {
  VerificationReport report;
  for (PointSet subset : enumerate_subsets(d.points(), d.strength())) {
    const std::uint64_t count = blocks_through(d, subset);
    if (count == 0) report.uncovered.push_back(subset);
    if (count >= 2) report.multiply_covered.push_back(subset);
  }
  report.is_steiner = report.uncovered.empty() && report.multiply_covered.empty();
  report.covering_numbers = covering_numbers(d);
  if (d.points() == 2 * d.block_size()) report.complement_closed = is_complement_closed(d);
  return report;
}

CoveringNumbers covering_numbers(const Design& d) {
  CoveringNumbers lambda;
  for (int i = 0; i <= d.strength(); ++i) {
    std::optional<std::uint64_t> value;
    bool uniform = true;
    for (PointSet subset : enumerate_subsets(d.points(), i)) {
      const std::uint64_t count = blocks_through(d, subset);
      if (!value) {
        value = count;
      } else if (*value != count) {
        uniform = false;
        break;
      }
    }
    lambda.push_back(uniform ? value : std::nullopt);
  }
  return lambda;
}

IntersectionSpectrum intersection_spectrum(const Design& d) {
  IntersectionSpectrum spectrum;
  const auto blocks = d.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      ++spectrum.histogram[(blocks[i] & blocks[j]).size()];
    }
  }
  return spectrum;
}

std::vector<std::uint64_t> block_intersection_row(const Design& d, std::size_t block_index) {
  const auto blocks = d.blocks();
  std::vector<std::uint64_t> row(static_cast<std::size_t>(d.block_size()) + 1, 0);
  const Block self = blocks[block_index];
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j == block_index) continue;
    ++row[static_cast<std::size_t>((self & blocks[j]).size())];
  }
  return row;
}

bool is_complement_closed(const Design& d) {
  if (d.points() != 2 * d.block_size()) {
    throw DesignError("complement closure needs n = 2k, got k=" + std::to_string(d.block_size()) +
                      " n=" + std::to_string(d.points()));
  }
  return std::all_of(d.blocks().begin(), d.blocks().end(),
                     [&](Block b) { return d.contains(complement_block(b, d.points())); });
}

Design derive(const Design& d, PointId p) {
  if (p.index() < 0 || p.index() >= d.points()) {
    throw DesignError("derive: point v" + std::to_string(p.external()) + " out of range 1.." +
                      std::to_string(d.points()));
  }
  const std::uint64_t low_mask = (std::uint64_t{1} << p.index()) - 1;
  std::vector<Block> blocks;
  for (Block b : d.blocks()) {
    if (!b.contains(p)) continue;
    // Drop bit p and shift every higher point down by one.
    const std::uint64_t bits = b.bits();
    blocks.emplace_back((bits & low_mask) | ((bits >> 1) & ~low_mask));
  }
  const DesignParams params{d.strength() - 1, d.block_size() - 1, d.points() - 1};
  return Design(params, std::move(blocks));
}

}  // namespace steiner
