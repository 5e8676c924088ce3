#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace steiner {

/// Largest ground set supported by the fixed-width set representation.
inline constexpr int kMaxPoints = 64;

/// Raised for malformed points, blocks, designs and parameters.
class DesignError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of the ground set. Stored 0-based; rendered 1-based as v1..vn.
class PointId {
 public:
  constexpr PointId() = default;

  static constexpr PointId from_index(int zero_based) { return PointId(zero_based); }
  /// Checked conversion from the 1-based external label.
  static PointId from_external(int one_based, int n);

  constexpr int index() const { return index_; }
  constexpr int external() const { return index_ + 1; }

  friend constexpr auto operator<=>(PointId, PointId) = default;

 private:
  constexpr explicit PointId(int index) : index_(index) {}
  int index_ = 0;
};

/// Subset of a ground set of at most 64 points, one bit per point.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}
  PointSet(std::initializer_list<PointId> points) {
    for (PointId p : points) insert(p);
  }

  /// The set {v1..vn}.
  static constexpr PointSet full(int n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  /// Builds a set from 1-based labels without range checks; for literal tables.
  static PointSet of(std::initializer_list<int> one_based);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(PointId p) const { return (bits_ >> p.index()) & 1U; }
  constexpr bool contains(PointSet other) const { return (bits_ & other.bits_) == other.bits_; }
  constexpr bool disjoint(PointSet other) const { return (bits_ & other.bits_) == 0; }

  constexpr void insert(PointId p) { bits_ |= std::uint64_t{1} << p.index(); }
  constexpr void erase(PointId p) { bits_ &= ~(std::uint64_t{1} << p.index()); }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  constexpr PointSet operator^(PointSet o) const { return PointSet(bits_ ^ o.bits_); }

  /// Members in ascending order.
  std::vector<PointId> points() const;
  /// Ascending 1-based labels.
  std::vector<int> labels() const;

  /// "{v1,v2,v5}"
  std::string to_string() const;

  friend constexpr bool operator==(PointSet, PointSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the ascending member lists.
bool lex_less(PointSet a, PointSet b);

struct LexLess {
  bool operator()(PointSet a, PointSet b) const { return lex_less(a, b); }
};

/// Number of i-subsets of an n-set. Exact for every argument used here (n <= 64).
std::uint64_t binomial(int n, int i);

/// All i-subsets of {v1..vn} in lexicographic order. Single pass.
class SubsetRange {
 public:
  SubsetRange(int n, int i);

  class iterator {
   public:
    using value_type = PointSet;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    PointSet operator*() const { return current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class SubsetRange;
    iterator(int n, int i);

    int n_ = 0;
    std::vector<int> idx_;
    PointSet current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, i_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
  int i_;
};

inline SubsetRange enumerate_subsets(int n, int i) { return SubsetRange(n, i); }

}  // namespace steiner
