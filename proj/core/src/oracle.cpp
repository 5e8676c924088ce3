#include "steiner/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "steiner/verification.hpp"

namespace steiner {

void SearchConfig::validate() const {
  if (max_solutions < 1) throw DesignError("max_solutions must be at least 1");
}

namespace {

// Dancing links over a 0/1 matrix: columns are the s-subsets still to cover,
// rows are candidate options (one block, or a block with its complement).
class DancingLinks {
 public:
  explicit DancingLinks(int columns) {
    const auto n = static_cast<std::size_t>(columns) + 1;
    left_.resize(n);
    right_.resize(n);
    up_.resize(n);
    down_.resize(n);
    column_.resize(n);
    row_.assign(n, -1);
    size_.assign(n, 0);
    for (int c = 0; c <= columns; ++c) {
      left_[idx(c)] = c == 0 ? columns : c - 1;
      right_[idx(c)] = c == columns ? 0 : c + 1;
      up_[idx(c)] = c;
      down_[idx(c)] = c;
      column_[idx(c)] = c;
    }
  }

  // Columns are 1-based inside the structure.
  void add_row(int row_id, const std::vector<int>& columns) {
    int first = -1;
    for (int col0 : columns) {
      const int c = col0 + 1;
      const int node = static_cast<int>(left_.size());
      left_.push_back(node);
      right_.push_back(node);
      up_.push_back(up_[idx(c)]);
      down_.push_back(c);
      column_.push_back(c);
      row_.push_back(row_id);
      size_.push_back(0);
      down_[idx(up_[idx(c)])] = node;
      up_[idx(c)] = node;
      ++size_[idx(c)];
      if (first < 0) {
        first = node;
      } else {
        left_[idx(node)] = left_[idx(first)];
        right_[idx(node)] = first;
        right_[idx(left_[idx(first)])] = node;
        left_[idx(first)] = node;
      }
    }
  }

  struct Limits {
    std::uint64_t max_solutions;
    std::chrono::steady_clock::time_point deadline;
    BranchOrder order;
  };

  struct Result {
    std::vector<std::vector<int>> solutions;
    bool exhausted = false;
    bool timed_out = false;
    std::uint64_t nodes = 0;
  };

  Result solve(const Limits& limits) {
    limits_ = limits;
    result_ = Result{};
    chosen_.clear();
    stop_ = false;
    search();
    result_.exhausted = !stop_;
    return std::move(result_);
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  void cover(int c) {
    right_[idx(left_[idx(c)])] = right_[idx(c)];
    left_[idx(right_[idx(c)])] = left_[idx(c)];
    for (int i = down_[idx(c)]; i != c; i = down_[idx(i)]) {
      for (int j = right_[idx(i)]; j != i; j = right_[idx(j)]) {
        up_[idx(down_[idx(j)])] = up_[idx(j)];
        down_[idx(up_[idx(j)])] = down_[idx(j)];
        --size_[idx(column_[idx(j)])];
      }
    }
  }

  void uncover(int c) {
    for (int i = up_[idx(c)]; i != c; i = up_[idx(i)]) {
      for (int j = left_[idx(i)]; j != i; j = left_[idx(j)]) {
        ++size_[idx(column_[idx(j)])];
        up_[idx(down_[idx(j)])] = j;
        down_[idx(up_[idx(j)])] = j;
      }
    }
    right_[idx(left_[idx(c)])] = c;
    left_[idx(right_[idx(c)])] = c;
  }

  int choose_column() const {
    int best = right_[0];
    if (limits_.order == BranchOrder::lexicographic) return best;
    for (int c = right_[0]; c != 0; c = right_[idx(c)]) {
      if (size_[idx(c)] < size_[idx(best)]) best = c;
    }
    return best;
  }

  void search() {
    if (stop_) return;
    ++result_.nodes;
    if ((result_.nodes & 0x3FF) == 0 && std::chrono::steady_clock::now() > limits_.deadline) {
      result_.timed_out = true;
      stop_ = true;
      return;
    }
    if (right_[0] == 0) {
      result_.solutions.push_back(chosen_);
      if (result_.solutions.size() >= limits_.max_solutions) stop_ = true;
      return;
    }
    const int c = choose_column();
    if (size_[idx(c)] == 0) return;
    cover(c);
    for (int r = down_[idx(c)]; r != c && !stop_; r = down_[idx(r)]) {
      chosen_.push_back(row_[idx(r)]);
      for (int j = right_[idx(r)]; j != r; j = right_[idx(j)]) cover(column_[idx(j)]);
      search();
      for (int j = left_[idx(r)]; j != r; j = left_[idx(j)]) uncover(column_[idx(j)]);
      chosen_.pop_back();
    }
    uncover(c);
  }

  std::vector<int> left_, right_, up_, down_, column_, row_, size_;
  std::vector<int> chosen_;
  Limits limits_{};
  Result result_;
  bool stop_ = false;
};

// s-subsets inside a block, as item ids; -1 marks an item already covered.
std::vector<int> items_of(Block b, int s, const std::unordered_map<std::uint64_t, int>& item_id) {
  std::vector<int> out;
  const auto members = b.points();
  for (PointSet local : enumerate_subsets(b.size(), s)) {
    PointSet sub;
    for (PointId p : local.points()) sub.insert(members[static_cast<std::size_t>(p.index())]);
    auto it = item_id.find(sub.bits());
    out.push_back(it == item_id.end() ? -1 : it->second);
  }
  return out;
}

SearchOutcome run_cover(const DesignParams& params, const SearchConfig& cfg,
                        const std::vector<Block>& fixed) {
  cfg.validate();
  params.validate();
  const int n = params.points;
  const int k = params.block_size;
  const int s = params.strength;
  if (cfg.complement_closed && n != 2 * k) {
    throw DesignError("complement-closed search needs n = 2k");
  }

  SearchOutcome outcome;
  // Multiplicity of each s-subset under the fixed blocks.
  std::unordered_map<std::uint64_t, int> fixed_cover;
  for (Block b : fixed) {
    const auto members = b.points();
    for (PointSet local : enumerate_subsets(k, s)) {
      PointSet sub;
      for (PointId p : local.points()) sub.insert(members[static_cast<std::size_t>(p.index())]);
      if (++fixed_cover[sub.bits()] > 1) return outcome;  // unsatisfiable
    }
  }

  std::unordered_map<std::uint64_t, int> item_id;
  int items = 0;
  for (PointSet sub : enumerate_subsets(n, s)) {
    if (!fixed_cover.contains(sub.bits())) item_id.emplace(sub.bits(), items++);
  }

  // Candidate options in lexicographic order of their (first) block.
  std::vector<std::vector<Block>> options;
  DancingLinks dlx(items);
  std::unordered_map<std::uint64_t, bool> is_fixed;
  for (Block b : fixed) is_fixed[b.bits()] = true;
  for (Block b : enumerate_subsets(n, k)) {
    std::vector<Block> group{b};
    if (cfg.complement_closed) {
      const Block comp = complement_block(b, n);
      if (lex_less(comp, b)) continue;
      group.push_back(comp);
    }
    std::vector<int> cols;
    bool usable = true;
    for (Block g : group) {
      if (is_fixed.contains(g.bits())) {
        usable = false;
        break;
      }
      for (int id : items_of(g, s, item_id)) {
        if (id < 0) {
          usable = false;
          break;
        }
        cols.push_back(id);
      }
      if (!usable) break;
    }
    if (!usable) continue;
    dlx.add_row(static_cast<int>(options.size()), cols);
    options.push_back(std::move(group));
  }

  const auto deadline = std::chrono::steady_clock::now() + cfg.time_budget;
  auto result = dlx.solve({cfg.max_solutions, deadline, cfg.branch_order});
  outcome.nodes = result.nodes;
  outcome.exhausted = result.exhausted;
  for (const auto& rows : result.solutions) {
    std::vector<Block> blocks = fixed;
    for (int r : rows) {
      for (Block b : options[static_cast<std::size_t>(r)]) blocks.push_back(b);
    }
    outcome.designs.emplace_back(params, std::move(blocks));
  }
  if (!outcome.designs.empty() && !result.timed_out) {
    outcome.status = SearchStatus::found;
  } else if (result.timed_out) {
    outcome.status = SearchStatus::timeout;
  } else {
    outcome.status = SearchStatus::unsatisfiable;
  }
  return outcome;
}

// Per-point invariant: degree followed by the sorted intersection rows of the
// blocks through the point.
using PointSignature = std::vector<std::vector<std::uint64_t>>;

std::vector<PointSignature> point_signatures(const Design& d) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t i = 0; i < d.size(); ++i) rows.push_back(block_intersection_row(d, i));
  std::vector<PointSignature> sig(static_cast<std::size_t>(d.points()));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (PointId p : d.blocks()[i].points()) sig[static_cast<std::size_t>(p.index())].push_back(rows[i]);
  }
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Design& from, const Design& to)
      : from_(from), to_(to), n_(from.points()) {
    from_sig_ = point_signatures(from);
    to_sig_ = point_signatures(to);
    image_.assign(static_cast<std::size_t>(n_), -1);
  }

  std::optional<std::vector<PointId>> run() {
    if (!extend(0)) return std::nullopt;
    std::vector<PointId> pi;
    for (int v : image_) pi.push_back(PointId::from_index(v));
    return pi;
  }

 private:
  // Traces of all blocks on the assigned points must agree as multisets.
  bool consistent(int assigned) const {
    const PointSet domain = PointSet::full(assigned);
    PointSet range;
    for (int i = 0; i < assigned; ++i) range.insert(PointId::from_index(image_[static_cast<std::size_t>(i)]));
    std::vector<std::uint64_t> lhs;
    std::vector<std::uint64_t> rhs;
    lhs.reserve(from_.size());
    rhs.reserve(to_.size());
    for (Block b : from_.blocks()) {
      std::uint64_t mapped = 0;
      for (std::uint64_t rest = (b & domain).bits(); rest != 0; rest &= rest - 1) {
        mapped |= std::uint64_t{1} << image_[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      lhs.push_back(mapped);
    }
    for (Block b : to_.blocks()) rhs.push_back((b & range).bits());
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
  }

  bool extend(int point) {
    if (point == n_) return true;
    for (int candidate = 0; candidate < n_; ++candidate) {
      if ((used_ >> candidate) & 1U) continue;
      if (from_sig_[static_cast<std::size_t>(point)] != to_sig_[static_cast<std::size_t>(candidate)]) continue;
      image_[static_cast<std::size_t>(point)] = candidate;
      used_ |= std::uint64_t{1} << candidate;
      if (consistent(point + 1) && extend(point + 1)) return true;
      used_ &= ~(std::uint64_t{1} << candidate);
      image_[static_cast<std::size_t>(point)] = -1;
    }
    return false;
  }

  const Design& from_;
  const Design& to_;
  int n_;
  std::vector<PointSignature> from_sig_;
  std::vector<PointSignature> to_sig_;
  std::vector<int> image_;
  std::uint64_t used_ = 0;
};

}  // namespace

SearchOutcome exact_cover_build(const DesignParams& params, const SearchConfig& cfg) {
  return run_cover(params, cfg, {});
}

SearchOutcome complete_partial(const Design& partial, const SearchConfig& cfg) {
  if (cfg.complement_closed && partial.points() == 2 * partial.block_size() &&
      !is_complement_closed(partial)) {
    throw DesignError("complement-closed completion needs a complement-closed partial design");
  }
  return run_cover(partial.params(), cfg,
                   std::vector<Block>(partial.blocks().begin(), partial.blocks().end()));
}

std::optional<std::vector<PointId>> isomorphic(const Design& from, const Design& to) {
  if (from.params() != to.params() || from.size() != to.size()) return std::nullopt;
  if (intersection_spectrum(from) != intersection_spectrum(to)) return std::nullopt;
  auto pi = IsomorphismSearch(from, to).run();
  if (pi && !is_isomorphism(from, to, *pi)) return std::nullopt;
  return pi;
}

bool is_isomorphism(const Design& from, const Design& to, const std::vector<PointId>& pi) {
  if (from.params() != to.params() || static_cast<int>(pi.size()) != from.points()) return false;
  std::vector<int> image;
  for (PointId p : pi) image.push_back(p.index());
  try {
    return relabel(from, image) == to;
  } catch (const DesignError&) {
    return false;
  }
}

}  // namespace steiner
