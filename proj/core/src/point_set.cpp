#include "steiner/point_set.hpp"

#include <numeric>

namespace steiner {

PointId PointId::from_external(int one_based, int n) {
  if (n < 1 || n > kMaxPoints) {
    throw DesignError("ground set size " + std::to_string(n) + " outside 1.." +
                      std::to_string(kMaxPoints));
  }
  if (one_based < 1 || one_based > n) {
    throw DesignError("point " + std::to_string(one_based) + " out of range 1.." +
                      std::to_string(n));
  }
  return PointId(one_based - 1);
}

PointSet PointSet::of(std::initializer_list<int> one_based) {
  PointSet s;
  for (int label : one_based) s.insert(PointId::from_index(label - 1));
  return s;
}

std::vector<PointId> PointSet::points() const {
  std::vector<PointId> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(PointId::from_index(std::countr_zero(rest)));
  }
  return out;
}

std::vector<int> PointSet::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string PointSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int label : labels()) {
    if (!first) out += ',';
    out += 'v';
    out += std::to_string(label);
    first = false;
  }
  out += '}';
  return out;
}

bool lex_less(PointSet a, PointSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  // Below `low` both lists agree. Whichever set owns `low` has the smaller
  // element at that position, unless the other list has already ended.
  const std::uint64_t above = ~((low << 1) - 1);
  if (a.bits() & low) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

std::uint64_t binomial(int n, int i) {
  if (i < 0 || n < 0 || i > n) return 0;
  i = std::min(i, n - i);
  std::uint64_t r = 1;
  for (int j = 1; j <= i; ++j) {
    // r * (n - i + j) / j stays integral at every step.
    const std::uint64_t num = static_cast<std::uint64_t>(n - i + j);
    const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(j));
    r = (r / g) * (num / (static_cast<std::uint64_t>(j) / g));
  }
  return r;
}

SubsetRange::SubsetRange(int n, int i) : n_(n), i_(i) {
  if (n < 0 || n > kMaxPoints || i < 0 || i > n) {
    throw DesignError("enumerate_subsets requires 0 <= i <= n <= 64");
  }
}

SubsetRange::iterator::iterator(int n, int i) : n_(n), idx_(static_cast<std::size_t>(i)), done_(false) {
  std::iota(idx_.begin(), idx_.end(), 0);
  for (int v : idx_) current_.insert(PointId::from_index(v));
}

SubsetRange::iterator& SubsetRange::iterator::operator++() {
  const int k = static_cast<int>(idx_.size());
  int pos = k - 1;
  while (pos >= 0 && idx_[static_cast<std::size_t>(pos)] == n_ - k + pos) --pos;
  if (pos < 0) {
    done_ = true;
    return *this;
  }
  ++idx_[static_cast<std::size_t>(pos)];
  for (int j = pos + 1; j < k; ++j) {
    idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
  }
  current_ = PointSet();
  for (int v : idx_) current_.insert(PointId::from_index(v));
  return *this;
}

}  // namespace steiner
