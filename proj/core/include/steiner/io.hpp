#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "steiner/coloring.hpp"
#include "steiner/construction.hpp"
#include "steiner/design.hpp"
#include "steiner/oracle.hpp"
#include "steiner/verification.hpp"

namespace steiner {

/// Input that does not parse as the expected format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Block-list text format:
//
//   s k n
//   1 2 3 4
//   1 2 5 6
//   ...
//
// one block per line as ascending 1-based labels separated by single spaces,
// lines in lexicographic order, trailing newline.

std::string to_text(const Design& d);
/// Accepts members in any order and lines in any order; blank lines are ignored.
Design parse_text(std::string_view text);

/// {"strength":s,"block_size":k,"points":n,"blocks":[[...],...]}
std::string to_json(const Design& d);
Design design_from_json(std::string_view json);

/// Sniffs the first non-space character: '{' means JSON, anything else text.
Design parse_design(std::string_view text);

std::string to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(std::string_view json);
std::string to_text(const VerificationReport& r);

std::string to_json(const IntersectionSpectrum& s);
IntersectionSpectrum spectrum_from_json(std::string_view json);
std::string to_text(const IntersectionSpectrum& s);

std::string to_json(const ColoringReport& r);
ColoringReport coloring_report_from_json(std::string_view json);
std::string to_text(const ColoringReport& r);

std::string to_json(const ColoringCensus& c);
ColoringCensus census_from_json(std::string_view json);
std::string to_text(const ColoringCensus& c);

std::string to_json(const StageTrace& t);
StageTrace stage_trace_from_json(std::string_view json);
std::string to_text(const StageTrace& t);

std::string to_json(const TableValidation& v);
std::string to_text(const TableValidation& v);

/// Bijection as "1->3 2->1 ..." (text) or {"bijection":[3,1,...]} with 1-based images.
std::string bijection_to_text(const std::vector<PointId>& pi);
std::string bijection_to_json(const std::vector<PointId>& pi);
std::vector<PointId> bijection_from_json(std::string_view json);

}  // namespace steiner
