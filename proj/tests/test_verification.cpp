#include "doctest.h"
#include "steiner/construction.hpp"
#include "steiner/io.hpp"
#include "steiner/verification.hpp"
#include "support/brute_force.hpp"

using namespace steiner;
namespace bf = steiner::testing;

namespace {

// Frozen from the brute-force reference over the constructed designs.
const std::vector<std::uint64_t> kHexadLambda = {132, 66, 30, 12, 4, 1};
const std::vector<std::uint64_t> kTetradLambda = {14, 7, 3, 1};
const std::map<int, int> kHexadRow = {{0, 1}, {2, 45}, {3, 40}, {4, 45}};
const std::map<int, int> kTetradRow = {{0, 1}, {2, 12}};

Design without_block(const Design& d, std::size_t index) {
  std::vector<Block> blocks(d.blocks().begin(), d.blocks().end());
  blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(index));
  return Design(d.params(), blocks);
}

std::vector<std::uint64_t> brute_lambda(const Design& d) {
  std::vector<std::uint64_t> out;
  const auto blocks = bf::blocks_as_labels(d);
  for (int i = 0; i <= d.strength(); ++i) {
    const auto counts = bf::coverage_counts(blocks, d.points(), i);
    REQUIRE(std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end());
    out.push_back(counts.front());
  }
  return out;
}

std::vector<std::uint64_t> unwrap(const CoveringNumbers& c) {
  std::vector<std::uint64_t> out;
  for (const auto& v : c) {
    REQUIRE(v.has_value());
    out.push_back(*v);
  }
  return out;
}

}  // namespace

TEST_CASE("frozen covering numbers match the brute-force reference") {
  CHECK(brute_lambda(build_s6_12().first) == kHexadLambda);
  CHECK(brute_lambda(build_s4_8().first) == kTetradLambda);
}

TEST_CASE("verify_steiner on the constructions") {
  const auto s12 = build_s6_12().first;
  const auto r12 = verify_steiner(s12);
  CHECK(r12.is_steiner);
  CHECK(r12.uncovered.empty());
  CHECK(r12.multiply_covered.empty());
  CHECK(r12.complement_closed == std::optional<bool>(true));
  CHECK(unwrap(r12.covering_numbers) == kHexadLambda);

  const auto s8 = build_s4_8().first;
  const auto r8 = verify_steiner(s8);
  CHECK(r8.is_steiner);
  CHECK(unwrap(r8.covering_numbers) == kTetradLambda);

  // Coverage identity: lambda_0 * C(k,s) = C(n,s) * lambda_s.
  CHECK(132 * bf::pascal(6, 5) == bf::pascal(12, 5) * 1);
  CHECK(14 * bf::pascal(4, 3) == bf::pascal(8, 3) * 1);
}

TEST_CASE("verify_steiner reports exactly what is missing") {
  const auto s8 = build_s4_8().first;
  for (std::size_t i = 0; i < s8.size(); ++i) {
    const Design broken = without_block(s8, i);
    const auto r = verify_steiner(broken);
    CHECK_FALSE(r.is_steiner);
    CHECK(r.uncovered.size() == 4);
    CHECK(r.multiply_covered.empty());
    for (PointSet t : r.uncovered) CHECK(s8.blocks()[i].contains(t));
    CHECK(r.complement_closed == std::optional<bool>(false));
    CHECK_FALSE(r.covering_numbers[3].has_value());
  }

  std::vector<Block> extra(s8.blocks().begin(), s8.blocks().end());
  extra.push_back(make_block({1, 2, 3, 5}, 8));
  const auto r = verify_steiner(Design(s8.params(), extra));
  CHECK_FALSE(r.is_steiner);
  CHECK(r.multiply_covered.size() == 4);
}

TEST_CASE("covering numbers flag non-uniform coverage") {
  const Design d({2, 3, 7}, {PointSet::of({1, 2, 3}), PointSet::of({1, 4, 5})});
  const auto lambda = covering_numbers(d);
  REQUIRE(lambda.size() == 3);
  CHECK(lambda[0] == std::optional<std::uint64_t>(2));
  CHECK_FALSE(lambda[1].has_value());
  CHECK_FALSE(lambda[2].has_value());
  CHECK_FALSE(verify_steiner(d).complement_closed.has_value());
}

TEST_CASE("intersection spectrum agrees with brute force") {
  for (const Design& d : {build_s6_12().first, build_s4_8().first}) {
    const auto blocks = bf::blocks_as_labels(d);
    const auto& expected_row = d.points() == 12 ? kHexadRow : kTetradRow;
    std::map<int, std::uint64_t> brute_hist;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      CHECK(bf::block_row(blocks, i) == expected_row);
      for (std::size_t j = i + 1; j < blocks.size(); ++j) ++brute_hist[bf::intersection_size(blocks[i], blocks[j])];
      const auto row = block_intersection_row(d, i);
      for (const auto& [size, count] : expected_row) {
        CHECK(row[static_cast<std::size_t>(size)] == static_cast<std::uint64_t>(count));
      }
    }
    const auto spectrum = intersection_spectrum(d);
    CHECK(spectrum.histogram == brute_hist);
    CHECK(spectrum.total_pairs() == bf::pascal(static_cast<int>(d.size()), 2));
    for (int i = d.strength(); i <= d.block_size(); ++i) CHECK_FALSE(spectrum.histogram.contains(i));
  }
  CHECK(intersection_spectrum(Design({1, 2, 4}, {PointSet::of({1, 2})})).histogram.empty());
}

TEST_CASE("is_complement_closed") {
  const auto s8 = build_s4_8().first;
  CHECK(is_complement_closed(s8));
  CHECK(is_complement_closed(build_s6_12().first));
  CHECK_FALSE(is_complement_closed(without_block(s8, 0)));
  CHECK_THROWS_AS(is_complement_closed(derive(s8, PointId::from_index(0))), DesignError);
}

TEST_CASE("derive through every point") {
  const auto s12 = build_s6_12().first;
  for (int p = 1; p <= 12; ++p) {
    const Design d = derive(s12, PointId::from_external(p, 12));
    CHECK(d.params() == DesignParams{4, 5, 11});
    CHECK(d.size() == 66);
    CHECK(verify_steiner(d).is_steiner);
    for (int q = 1; q <= 11; ++q) {
      const Design dd = derive(d, PointId::from_external(q, 11));
      CHECK(dd.size() == 30);
      CHECK(verify_steiner(dd).is_steiner);
    }
  }
  const auto s8 = build_s4_8().first;
  for (int p = 1; p <= 8; ++p) {
    const Design fano = derive(s8, PointId::from_external(p, 8));
    CHECK(fano.params() == DesignParams{2, 3, 7});
    CHECK(fano.size() == 7);
    CHECK(verify_steiner(fano).is_steiner);
  }
  CHECK_THROWS_AS(derive(s8, PointId::from_index(8)), DesignError);
}

TEST_CASE("derive relabels order-preservingly") {
  const auto s8 = build_s4_8().first;
  const Design fano = derive(s8, PointId::from_external(1, 8));
  // Blocks {1,2,3,4},{1,2,5,6},{1,2,7,8} become {1,2,3},{1,4,5},{1,6,7}.
  CHECK(fano.contains(PointSet::of({1, 2, 3})));
  CHECK(fano.contains(PointSet::of({1, 4, 5})));
  CHECK(fano.contains(PointSet::of({1, 6, 7})));
}

TEST_CASE("verification report JSON round-trip") {
  const auto s8 = build_s4_8().first;
  for (const Design& d : {s8, without_block(s8, 3), derive(s8, PointId::from_index(2))}) {
    const auto r = verify_steiner(d);
    CHECK(verification_report_from_json(to_json(r)) == r);
    const auto s = intersection_spectrum(d);
    CHECK(spectrum_from_json(to_json(s)) == s);
  }
  const std::string json = to_json(verify_steiner(s8));
  for (const char* field : {"\"is_steiner\"", "\"uncovered\"", "\"multiply_covered\"", "\"covering_numbers\"",
                            "\"complement_closed\""}) {
    CHECK(json.find(field) != std::string::npos);
  }
}
