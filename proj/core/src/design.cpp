#include "steiner/design.hpp"

#include <algorithm>

namespace steiner {

void DesignParams::validate() const {
  if (!(0 < strength && strength < block_size && block_size < points && points <= kMaxPoints)) {
    throw DesignError("invalid parameters S(" + std::to_string(strength) + "," +
                      std::to_string(block_size) + "," + std::to_string(points) +
                      "): need 0 < s < k < n <= 64");
  }
}

Design::Design(DesignParams params, std::vector<Block> blocks)
    : params_(params), blocks_(std::move(blocks)) {
  params_.validate();
  const Block ground = PointSet::full(params_.points);
  for (Block b : blocks_) {
    if (!ground.contains(b)) {
      throw DesignError("block " + b.to_string() + " has points outside 1.." +
                        std::to_string(params_.points));
    }
    if (b.size() != params_.block_size) {
      throw DesignError("block " + b.to_string() + " has " + std::to_string(b.size()) +
                        " points, expected " + std::to_string(params_.block_size));
    }
  }
  std::sort(blocks_.begin(), blocks_.end(), LexLess{});
  auto dup = std::adjacent_find(blocks_.begin(), blocks_.end());
  if (dup != blocks_.end()) {
    throw DesignError("duplicate block " + dup->to_string());
  }
}

bool Design::contains(Block b) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), b, LexLess{});
}

Block make_block(std::span<const int> one_based, int n) {
  Block b;
  for (int label : one_based) {
    const PointId p = PointId::from_external(label, n);
    if (b.contains(p)) {
      throw DesignError("duplicate point v" + std::to_string(label) + " in block");
    }
    b.insert(p);
  }
  return b;
}

Block make_block(std::initializer_list<int> one_based, int n) {
  return make_block(std::span<const int>(one_based.begin(), one_based.size()), n);
}

Block complement_block(Block b, int n) { return PointSet::full(n) - b; }

std::vector<Block> cartesian_union(const ExpansionRow& row, int k) {
  std::vector<Block> out;
  out.reserve(row.b_family.size());
  for (PointSet m : row.b_family) {
    if (!row.a_set.disjoint(m)) {
      throw DesignError("expansion member " + m.to_string() + " overlaps " +
                        row.a_set.to_string());
    }
    if (row.a_set.size() + m.size() != k) {
      throw DesignError("expansion " + row.a_set.to_string() + " x " + m.to_string() +
                        " does not give a block of size " + std::to_string(k));
    }
    out.push_back(row.a_set | m);
  }
  return out;
}

Design relabel(const Design& d, std::span<const int> image) {
  const int n = d.points();
  if (static_cast<int>(image.size()) != n) throw DesignError("relabel: image size mismatch");
  std::uint64_t seen = 0;
  for (int v : image) {
    if (v < 0 || v >= n || ((seen >> v) & 1U)) throw DesignError("relabel: not a permutation");
    seen |= std::uint64_t{1} << v;
  }
  std::vector<Block> blocks;
  blocks.reserve(d.size());
  for (Block b : d.blocks()) {
    Block mapped;
    for (PointId p : b.points()) mapped.insert(PointId::from_index(image[static_cast<std::size_t>(p.index())]));
    blocks.push_back(mapped);
  }
  return Design(d.params(), std::move(blocks));
}

}  // namespace steiner
