#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "steiner/design.hpp"

namespace steiner {

/// Abstract labels of the matching-derivation rules. The first six live in the
/// starting block h, the last six in its complement h'.
enum class Label { one, two, three, x, y, z, a, b, c, d, e, f };

inline constexpr int kLabelCount = 12;

/// Injective assignment of labels to points of V = {v1..v2t}.
///
/// For t = 6 all twelve labels are bound. For t = 4 only {1', x, y, z} on the h
/// side and {a, b, c, d} on the h' side are bound.
class VertexMapping {
 public:
  /// t = 6, arguments in label order 1',2',3',x,y,z,a,b,c,d,e,f.
  static VertexMapping for_hexads(const std::array<int, 12>& one_based);
  /// t = 4, arguments in label order 1',x,y,z,a,b,c,d.
  static VertexMapping for_tetrads(const std::array<int, 8>& one_based);

  /// v_i for every label, as in the opening table of each construction.
  static VertexMapping identity_hexads();
  static VertexMapping identity_tetrads();

  int half() const { return half_; }
  int points() const { return 2 * half_; }
  bool bound(Label l) const { return slots_[static_cast<std::size_t>(l)].has_value(); }
  /// Throws DesignError for a label this variant does not bind.
  PointId operator[](Label l) const;

  /// Image of a label set.
  PointSet image(std::initializer_list<Label> labels) const;

 private:
  VertexMapping(int half, std::array<std::optional<PointId>, kLabelCount> slots);

  int half_;
  std::array<std::optional<PointId>, kLabelCount> slots_;
};

/// Rule 2.1 for t = 6: rows (A,B), (A',B'), (A'',B'').
std::array<ExpansionRow, 3> step21_expand(const VertexMapping& m);
/// Rule 2.2 for t = 6: rows (A'',B''), (A''',B''').
std::array<ExpansionRow, 2> step22_expand(const VertexMapping& m);
/// Rule 2.1 for t = 4: rows (A,B), (A',B'), (A'',B'').
std::array<ExpansionRow, 3> step21_expand_t4(const VertexMapping& m);

/// A block together with the rule or table row that produced it.
struct TracedBlock {
  Block block;
  std::string source;
  bool complement = false;
};

/// Per-stage provenance of a staged construction.
struct StageTrace {
  std::vector<TracedBlock> stage1;
  std::vector<TracedBlock> stage2;
  std::vector<TracedBlock> stage3a;
  std::vector<TracedBlock> stage3b;

  std::size_t stage1_count() const { return stage1.size(); }
  std::size_t stage2_count() const { return stage2.size(); }
  std::size_t stage3a_count() const { return stage3a.size(); }
  std::size_t stage3b_count() const { return stage3b.size(); }
};

/// Block collection under construction. Every insertion brings its
/// complement along; any repeat is a hard error.
class ComplementClosedBuilder {
 public:
  explicit ComplementClosedBuilder(DesignParams params);

  /// Adds b and V \ b. Returns the two blocks in insertion order.
  std::array<Block, 2> add_with_complement(Block b);

  std::size_t size() const { return blocks_.size(); }
  bool contains(Block b) const { return seen_.contains(b.bits()); }
  const std::vector<Block>& blocks() const { return blocks_; }

  Design seal() const { return Design(params_, blocks_); }

 private:
  DesignParams params_;
  std::vector<Block> blocks_;
  std::unordered_set<std::uint64_t> seen_;
};

struct NamedRow {
  std::string name;
  ExpansionRow row;
};

/// Curated data driving the S(5,6,12) construction.
struct ExpansionTables {
  /// Relabellings whose rule-2.1 (A'',B'') row adds further blocks in stage 2.
  std::vector<std::pair<std::string, VertexMapping>> remappings;
  /// Further stage-2 (A'',B'') versions listed without their relabelling.
  std::vector<NamedRow> listed_rows;
  /// Triples through v1 joined with two complementary triples of h'.
  std::vector<NamedRow> triple_rows;
  /// Pairs through v1 joined with three 4-subsets of h'.
  std::vector<NamedRow> pair_rows;
};

/// The tables as published for S(5,6,12).
const ExpansionTables& hexad_tables();

std::pair<Design, StageTrace> build_s4_8();
std::pair<Design, StageTrace> build_s6_12();
/// Same pipeline with substitute tables; throws DesignError on any duplicate.
std::pair<Design, StageTrace> build_s6_12(const ExpansionTables& tables);

/// Blocks of stages 1 and 2 of the S(5,6,12) construction (62 blocks).
std::vector<Block> hexad_stage12_blocks(const ExpansionTables& tables);

struct RowCheck {
  std::string stage;  // "3a" or "3b"
  std::string name;
  PointSet a_set;
  /// Subsets of h' whose union with A is not yet covered by an earlier block.
  std::vector<PointSet> residual;
  /// Subsets of h' the row claims to cover with A.
  std::vector<PointSet> claimed;
  bool ok = false;
  std::string message;
};

struct TableValidation {
  std::vector<RowCheck> rows;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// Checks every triple row against the residual pairs after stage 2 and every
/// pair row against the residual triples after the triple rows.
TableValidation validate_expansion_tables(const ExpansionTables& tables);
TableValidation validate_expansion_tables();

}  // namespace steiner
