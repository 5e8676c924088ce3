#include "steiner/construction.hpp"

#include <algorithm>
#include <set>

#include "steiner/verification.hpp"

namespace steiner {

namespace {

constexpr std::size_t slot(Label l) { return static_cast<std::size_t>(l); }

bool on_h_side(Label l) { return slot(l) <= slot(Label::z); }

}  // namespace

VertexMapping::VertexMapping(int half, std::array<std::optional<PointId>, kLabelCount> slots)
    : half_(half), slots_(slots) {
  const int n = 2 * half_;
  const PointSet h = PointSet::full(half_);
  PointSet used;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (!slots_[i]) continue;
    const PointId p = *slots_[i];
    if (p.index() < 0 || p.index() >= n) throw DesignError("mapping image outside V");
    if (used.contains(p)) {
      throw DesignError("mapping is not injective at v" + std::to_string(p.external()));
    }
    used.insert(p);
    const bool want_h = on_h_side(static_cast<Label>(i));
    if (want_h != h.contains(p)) {
      throw DesignError("label mapped to v" + std::to_string(p.external()) +
                        (want_h ? " must lie in h" : " must lie in h'"));
    }
  }
}

VertexMapping VertexMapping::for_hexads(const std::array<int, 12>& one_based) {
  std::array<std::optional<PointId>, kLabelCount> slots;
  for (std::size_t i = 0; i < one_based.size(); ++i) {
    slots[i] = PointId::from_external(one_based[i], 12);
  }
  return VertexMapping(6, slots);
}

VertexMapping VertexMapping::for_tetrads(const std::array<int, 8>& one_based) {
  constexpr std::array<Label, 8> order = {Label::one, Label::x, Label::y, Label::z,
                                          Label::a,   Label::b, Label::c, Label::d};
  std::array<std::optional<PointId>, kLabelCount> slots;
  for (std::size_t i = 0; i < order.size(); ++i) {
    slots[slot(order[i])] = PointId::from_external(one_based[i], 8);
  }
  return VertexMapping(4, slots);
}

VertexMapping VertexMapping::identity_hexads() {
  return for_hexads({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
}

VertexMapping VertexMapping::identity_tetrads() { return for_tetrads({1, 2, 3, 4, 5, 6, 7, 8}); }

PointId VertexMapping::operator[](Label l) const {
  const auto& p = slots_[slot(l)];
  if (!p) throw DesignError("label not bound for t=" + std::to_string(half_));
  return *p;
}

PointSet VertexMapping::image(std::initializer_list<Label> labels) const {
  PointSet out;
  for (Label l : labels) out.insert((*this)[l]);
  return out;
}

namespace {

void require_half(const VertexMapping& m, int half) {
  if (m.half() != half) {
    throw DesignError("rule needs a t=" + std::to_string(half) + " mapping, got t=" +
                      std::to_string(m.half()));
  }
}

ExpansionRow row(const VertexMapping& m, std::initializer_list<Label> a,
                 std::initializer_list<std::initializer_list<Label>> family) {
  ExpansionRow r{m.image(a), {}};
  for (auto member : family) r.b_family.push_back(m.image(member));
  return r;
}

}  // namespace

std::array<ExpansionRow, 3> step21_expand(const VertexMapping& m) {
  require_half(m, 6);
  using enum Label;
  return {row(m, {one, two, three, x}, {{a, b}, {c, d}, {e, f}}),
          row(m, {one, two, three, y}, {{a, c}, {b, e}, {d, f}}),
          row(m, {one, two, three, z}, {{a, f}, {b, d}, {c, e}})};
}

std::array<ExpansionRow, 2> step22_expand(const VertexMapping& m) {
  require_half(m, 6);
  using enum Label;
  return {row(m, {one, two, x, y}, {{a, e}, {b, d}, {c, f}}),
          row(m, {one, three, x, y}, {{a, f}, {b, c}, {d, e}})};
}

std::array<ExpansionRow, 3> step21_expand_t4(const VertexMapping& m) {
  require_half(m, 4);
  using enum Label;
  return {row(m, {one, x}, {{a, b}, {c, d}}),
          row(m, {one, y}, {{a, c}, {b, d}}),
          row(m, {one, z}, {{a, d}, {b, c}})};
}

ComplementClosedBuilder::ComplementClosedBuilder(DesignParams params) : params_(params) {
  params_.validate();
  if (params_.points != 2 * params_.block_size) {
    throw DesignError("complement-closed construction needs n = 2k");
  }
}

std::array<Block, 2> ComplementClosedBuilder::add_with_complement(Block b) {
  if (b.size() != params_.block_size || !PointSet::full(params_.points).contains(b)) {
    throw DesignError("block " + b.to_string() + " is not a " +
                      std::to_string(params_.block_size) + "-subset of V");
  }
  const Block comp = complement_block(b, params_.points);
  for (Block candidate : {b, comp}) {
    if (contains(candidate)) throw DesignError("duplicate block " + candidate.to_string());
  }
  for (Block candidate : {b, comp}) {
    blocks_.push_back(candidate);
    seen_.insert(candidate.bits());
  }
  return {b, comp};
}

namespace {

NamedRow named(std::string name, std::initializer_list<int> a,
               std::initializer_list<std::initializer_list<int>> family) {
  ExpansionRow r{PointSet::of(a), {}};
  for (auto member : family) r.b_family.push_back(PointSet::of(member));
  return {std::move(name), std::move(r)};
}

ExpansionTables make_hexad_tables() {
  ExpansionTables t;
  // Label order 1',2',3',x,y,z,a,b,c,d,e,f.
  t.remappings = {
      {"remap from (A,B) and rule-2.2 (A'',B'')", VertexMapping::for_hexads({1, 2, 4, 3, 5, 6, 7, 8, 11, 12, 10, 9})},
      {"remap from (A',B') and rule-2.2 (A'',B'')", VertexMapping::for_hexads({1, 2, 5, 3, 4, 6, 7, 9, 11, 8, 12, 10})},
  };
  t.listed_rows = {
      named("listed {1,3,4,6}", {1, 3, 4, 6}, {{7, 10}, {8, 11}, {9, 12}}),
      named("listed {1,3,5,6}", {1, 3, 5, 6}, {{7, 11}, {9, 10}, {8, 12}}),
      named("listed {1,4,5,6}", {1, 4, 5, 6}, {{7, 8}, {11, 9}, {10, 12}}),
  };
  t.triple_rows = {
      named("triple {1,2,3}", {1, 2, 3}, {{7, 10, 11}, {8, 9, 12}}),
      named("triple {1,2,4}", {1, 2, 4}, {{7, 10, 12}, {8, 9, 11}}),
      named("triple {1,2,5}", {1, 2, 5}, {{7, 8, 12}, {9, 10, 11}}),
      named("triple {1,2,6}", {1, 2, 6}, {{7, 8, 11}, {9, 10, 12}}),
      named("triple {1,3,4}", {1, 3, 4}, {{7, 9, 11}, {8, 10, 12}}),
      named("triple {1,3,5}", {1, 3, 5}, {{7, 8, 10}, {9, 11, 12}}),
      named("triple {1,3,6}", {1, 3, 6}, {{7, 8, 9}, {10, 11, 12}}),
      named("triple {1,4,5}", {1, 4, 5}, {{7, 9, 10}, {8, 11, 12}}),
      named("triple {1,4,6}", {1, 4, 6}, {{7, 11, 12}, {8, 9, 10}}),
      named("triple {1,5,6}", {1, 5, 6}, {{7, 9, 12}, {8, 10, 11}}),
  };
  t.pair_rows = {
      named("pair {1,2}", {1, 2}, {{7, 8, 9, 10}, {7, 9, 11, 12}, {8, 10, 11, 12}}),
      named("pair {1,3}", {1, 3}, {{7, 8, 11, 12}, {8, 9, 10, 11}, {7, 9, 10, 12}}),
      named("pair {1,4}", {1, 4}, {{7, 8, 9, 12}, {7, 8, 10, 11}, {9, 10, 11, 12}}),
      named("pair {1,5}", {1, 5}, {{7, 8, 9, 11}, {8, 9, 10, 12}, {7, 10, 11, 12}}),
      named("pair {1,6}", {1, 6}, {{7, 8, 10, 12}, {7, 9, 10, 11}, {8, 9, 11, 12}}),
  };
  return t;
}

void expand_into(ComplementClosedBuilder& builder, std::vector<TracedBlock>& stage,
                 const ExpansionRow& r, int k, const std::string& source) {
  for (Block b : cartesian_union(r, k)) {
    const auto pair = builder.add_with_complement(b);
    stage.push_back({pair[0], source, false});
    stage.push_back({pair[1], source, true});
  }
}

void add_stage1(ComplementClosedBuilder& builder, StageTrace& trace, int half) {
  const auto pair = builder.add_with_complement(PointSet::full(half));
  trace.stage1.push_back({pair[0], "h", false});
  trace.stage1.push_back({pair[1], "h", true});
}

void add_hexad_stage2(ComplementClosedBuilder& builder, StageTrace& trace,
                      const ExpansionTables& tables) {
  const VertexMapping identity = VertexMapping::identity_hexads();
  const auto r21 = step21_expand(identity);
  const auto r22 = step22_expand(identity);
  expand_into(builder, trace.stage2, r21[0], 6, "rule 2.1 identity (A,B)");
  expand_into(builder, trace.stage2, r21[1], 6, "rule 2.1 identity (A',B')");
  expand_into(builder, trace.stage2, r21[2], 6, "rule 2.1 identity (A'',B'')");
  expand_into(builder, trace.stage2, r22[0], 6, "rule 2.2 identity (A'',B'')");
  expand_into(builder, trace.stage2, r22[1], 6, "rule 2.2 identity (A''',B''')");
  for (const auto& [name, mapping] : tables.remappings) {
    expand_into(builder, trace.stage2, step21_expand(mapping)[2], 6, "rule 2.1 " + name + " (A'',B'')");
  }
  for (const auto& listed : tables.listed_rows) {
    expand_into(builder, trace.stage2, listed.row, 6, "rule 2.1 " + listed.name + " (A'',B'')");
  }
}

constexpr DesignParams kHexadParams{5, 6, 12};
constexpr DesignParams kTetradParams{3, 4, 8};

/// Subsets S of `side` of the given size such that A | S lies in no block.
std::vector<PointSet> residual(const std::vector<Block>& blocks, PointSet a, PointSet side,
                               int size) {
  std::vector<PointSet> out;
  for (PointSet local : enumerate_subsets(side.size(), size)) {
    // Spread the local subset onto the members of `side`.
    const auto members = side.points();
    PointSet s;
    for (PointId p : local.points()) s.insert(members[static_cast<std::size_t>(p.index())]);
    const PointSet target = a | s;
    const bool covered =
        std::any_of(blocks.begin(), blocks.end(), [&](Block b) { return b.contains(target); });
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

/// Every `size`-subset inside each family member, sorted; repeats retained.
std::vector<PointSet> claimed(const ExpansionRow& r, int size) {
  std::vector<PointSet> out;
  for (PointSet member : r.b_family) {
    const auto members = member.points();
    for (PointSet local : enumerate_subsets(member.size(), size)) {
      PointSet s;
      for (PointId p : local.points()) s.insert(members[static_cast<std::size_t>(p.index())]);
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

RowCheck check_row(const std::vector<Block>& earlier, const NamedRow& named_row,
                   const std::string& stage, int a_size, int member_size, int member_count,
                   int sub_size, bool members_disjoint) {
  const PointSet h = PointSet::full(6);
  const PointSet h_comp = complement_block(h, 12);
  const ExpansionRow& r = named_row.row;
  RowCheck check{stage, named_row.name, r.a_set, {}, {}, false, {}};

  if (r.a_set.size() != a_size || !h.contains(r.a_set) || !r.a_set.contains(PointId::from_index(0))) {
    check.message = "A must be a " + std::to_string(a_size) + "-subset of h containing v1";
    return check;
  }
  if (static_cast<int>(r.b_family.size()) != member_count) {
    check.message = "B must have " + std::to_string(member_count) + " members";
    return check;
  }
  for (PointSet m : r.b_family) {
    if (m.size() != member_size || !h_comp.contains(m)) {
      check.message = "B member " + m.to_string() + " is not a " + std::to_string(member_size) +
                      "-subset of h'";
      return check;
    }
  }
  if (members_disjoint) {
    for (std::size_t i = 0; i < r.b_family.size(); ++i) {
      for (std::size_t j = i + 1; j < r.b_family.size(); ++j) {
        if (!r.b_family[i].disjoint(r.b_family[j])) {
          check.message = "B members " + r.b_family[i].to_string() + " and " +
                          r.b_family[j].to_string() + " overlap";
          return check;
        }
      }
    }
  }
  check.residual = residual(earlier, r.a_set, h_comp, sub_size);
  check.claimed = claimed(r, sub_size);
  if (std::adjacent_find(check.claimed.begin(), check.claimed.end()) != check.claimed.end()) {
    check.message = "B covers some " + std::to_string(sub_size) + "-subset of h' twice";
    return check;
  }
  if (check.claimed != check.residual) {
    check.message = "B does not match the residual " + std::to_string(sub_size) + "-subsets";
    return check;
  }
  check.ok = true;
  return check;
}

}  // namespace

const ExpansionTables& hexad_tables() {
  static const ExpansionTables tables = make_hexad_tables();
  return tables;
}

std::pair<Design, StageTrace> build_s4_8() {
  ComplementClosedBuilder builder(kTetradParams);
  StageTrace trace;
  add_stage1(builder, trace, 4);
  const auto rows = step21_expand_t4(VertexMapping::identity_tetrads());
  expand_into(builder, trace.stage2, rows[0], 4, "rule 2.1 identity (A,B)");
  expand_into(builder, trace.stage2, rows[1], 4, "rule 2.1 identity (A',B')");
  expand_into(builder, trace.stage2, rows[2], 4, "rule 2.1 identity (A'',B'')");
  return {builder.seal(), std::move(trace)};
}

std::pair<Design, StageTrace> build_s6_12() { return build_s6_12(hexad_tables()); }

std::pair<Design, StageTrace> build_s6_12(const ExpansionTables& tables) {
  ComplementClosedBuilder builder(kHexadParams);
  StageTrace trace;
  add_stage1(builder, trace, 6);
  add_hexad_stage2(builder, trace, tables);
  for (const auto& r : tables.triple_rows) expand_into(builder, trace.stage3a, r.row, 6, r.name);
  for (const auto& r : tables.pair_rows) expand_into(builder, trace.stage3b, r.row, 6, r.name);
  return {builder.seal(), std::move(trace)};
}

std::vector<Block> hexad_stage12_blocks(const ExpansionTables& tables) {
  ComplementClosedBuilder builder(kHexadParams);
  StageTrace trace;
  add_stage1(builder, trace, 6);
  add_hexad_stage2(builder, trace, tables);
  return builder.blocks();
}

std::size_t TableValidation::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const RowCheck& r) { return !r.ok; }));
}

TableValidation validate_expansion_tables(const ExpansionTables& tables) {
  TableValidation report;
  std::vector<Block> earlier = hexad_stage12_blocks(tables);
  for (const auto& r : tables.triple_rows) {
    report.rows.push_back(check_row(earlier, r, "3a", 3, 3, 2, 2, true));
  }
  // Pair rows are checked against everything through the triple rows, with
  // their complements, whether or not each triple row validated.
  for (const auto& r : tables.triple_rows) {
    for (PointSet m : r.row.b_family) {
      const Block b = r.row.a_set | m;
      earlier.push_back(b);
      earlier.push_back(complement_block(b, 12));
    }
  }
  for (const auto& r : tables.pair_rows) {
    report.rows.push_back(check_row(earlier, r, "3b", 2, 4, 3, 3, false));
  }
  return report;
}

TableValidation validate_expansion_tables() { return validate_expansion_tables(hexad_tables()); }

}  // namespace steiner
