#include "steiner/io.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace steiner {

using nlohmann::json;

namespace {

std::string join_labels(PointSet s) {
  std::string out;
  for (int label : s.labels()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(label);
  }
  return out;
}

std::vector<int> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    int value = 0;
    const auto* first = line.data() + pos;
    const auto* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError("line " + std::to_string(line_no) + ": expected integers, got '" +
                       std::string(line) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json set_array(const std::vector<PointSet>& sets) {
  json arr = json::array();
  for (PointSet s : sets) arr.push_back(s.labels());
  return arr;
}

PointSet set_from_json(const json& j) {
  PointSet s;
  for (int label : j.get<std::vector<int>>()) {
    if (label < 1 || label > kMaxPoints) throw ParseError("point label out of range");
    s.insert(PointId::from_index(label - 1));
  }
  return s;
}

std::vector<PointSet> sets_from_json(const json& j) {
  std::vector<PointSet> out;
  for (const auto& item : j) out.push_back(set_from_json(item));
  return out;
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

json traced_array(const std::vector<TracedBlock>& stage) {
  json arr = json::array();
  for (const auto& t : stage) {
    arr.push_back({{"block", t.block.labels()}, {"source", t.source}, {"complement", t.complement}});
  }
  return arr;
}

std::vector<TracedBlock> traced_from_json(const json& j) {
  std::vector<TracedBlock> out;
  for (const auto& item : j) {
    out.push_back({set_from_json(item.at("block")), item.at("source").get<std::string>(),
                   item.at("complement").get<bool>()});
  }
  return out;
}

}  // namespace

std::string to_text(const Design& d) {
  std::string out = std::to_string(d.strength()) + ' ' + std::to_string(d.block_size()) + ' ' +
                    std::to_string(d.points()) + '\n';
  for (Block b : d.blocks()) {
    out += join_labels(b);
    out += '\n';
  }
  return out;
}

Design parse_text(std::string_view text) {
  std::optional<DesignParams> params;
  std::vector<Block> blocks;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    const auto values = parse_ints(line, line_no);
    if (values.empty()) continue;
    if (!params) {
      if (values.size() != 3) throw ParseError("header must be 's k n'");
      params = DesignParams{values[0], values[1], values[2]};
      try {
        params->validate();
      } catch (const DesignError& e) {
        throw ParseError(std::string("header: ") + e.what());
      }
      continue;
    }
    try {
      blocks.push_back(make_block(values, params->points));
    } catch (const DesignError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!params) throw ParseError("empty input: missing 's k n' header");
  try {
    return Design(*params, std::move(blocks));
  } catch (const DesignError& e) {
    throw ParseError(e.what());
  }
}

std::string to_json(const Design& d) {
  json j;
  j["strength"] = d.strength();
  j["block_size"] = d.block_size();
  j["points"] = d.points();
  j["blocks"] = set_array(std::vector<PointSet>(d.blocks().begin(), d.blocks().end()));
  return j.dump() + '\n';
}

Design design_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    const DesignParams params{j.at("strength").get<int>(), j.at("block_size").get<int>(),
                              j.at("points").get<int>()};
    try {
      params.validate();
      std::vector<Block> blocks;
      for (const auto& b : j.at("blocks")) {
        blocks.push_back(make_block(b.get<std::vector<int>>(), params.points));
      }
      return Design(params, std::move(blocks));
    } catch (const DesignError& e) {
      throw ParseError(e.what());
    }
  });
}

Design parse_design(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return design_from_json(text);
  return parse_text(text);
}

std::string to_json(const VerificationReport& r) {
  json j;
  j["is_steiner"] = r.is_steiner;
  j["uncovered"] = set_array(r.uncovered);
  j["multiply_covered"] = set_array(r.multiply_covered);
  json lambda = json::array();
  for (const auto& v : r.covering_numbers) lambda.push_back(v ? json(*v) : json(nullptr));
  j["covering_numbers"] = lambda;
  j["complement_closed"] = r.complement_closed ? json(*r.complement_closed) : json(nullptr);
  return j.dump() + '\n';
}

VerificationReport verification_report_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    VerificationReport r;
    r.is_steiner = j.at("is_steiner").get<bool>();
    r.uncovered = sets_from_json(j.at("uncovered"));
    r.multiply_covered = sets_from_json(j.at("multiply_covered"));
    for (const auto& v : j.at("covering_numbers")) {
      r.covering_numbers.push_back(v.is_null() ? std::nullopt
                                               : std::optional<std::uint64_t>(v.get<std::uint64_t>()));
    }
    const auto& cc = j.at("complement_closed");
    if (!cc.is_null()) r.complement_closed = cc.get<bool>();
    return r;
  });
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "is_steiner " << (r.is_steiner ? "true" : "false") << '\n';
  out << "uncovered " << r.uncovered.size() << '\n';
  for (PointSet s : r.uncovered) out << "  " << join_labels(s) << '\n';
  out << "multiply_covered " << r.multiply_covered.size() << '\n';
  for (PointSet s : r.multiply_covered) out << "  " << join_labels(s) << '\n';
  out << "covering_numbers";
  for (const auto& v : r.covering_numbers) {
    out << ' ';
    if (v) {
      out << *v;
    } else {
      out << '-';
    }
  }
  out << '\n';
  out << "complement_closed "
      << (r.complement_closed ? (*r.complement_closed ? "true" : "false") : "n/a") << '\n';
  return out.str();
}

std::string to_json(const IntersectionSpectrum& s) {
  json hist = json::object();
  for (const auto& [size, count] : s.histogram) hist[std::to_string(size)] = count;
  return json{{"histogram", hist}, {"total_pairs", s.total_pairs()}}.dump() + '\n';
}

IntersectionSpectrum spectrum_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    IntersectionSpectrum s;
    for (const auto& [key, value] : j.at("histogram").items()) {
      s.histogram[std::stoi(key)] = value.get<std::uint64_t>();
    }
    return s;
  });
}

std::string to_text(const IntersectionSpectrum& s) {
  std::string out;
  for (const auto& [size, count] : s.histogram) {
    out += std::to_string(size) + ' ' + std::to_string(count) + '\n';
  }
  return out;
}

std::string to_json(const ColoringReport& r) {
  return json{{"proper", r.proper},
              {"monochromatic_blocks", set_array(r.monochromatic_blocks)},
              {"red_count", r.red_count}}
             .dump() +
         '\n';
}

ColoringReport coloring_report_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    return ColoringReport{j.at("proper").get<bool>(), sets_from_json(j.at("monochromatic_blocks")),
                          j.at("red_count").get<int>()};
  });
}

std::string to_text(const ColoringReport& r) {
  std::string out = std::string("proper ") + (r.proper ? "true" : "false") + '\n';
  out += "red_count " + std::to_string(r.red_count) + '\n';
  out += "monochromatic_blocks " + std::to_string(r.monochromatic_blocks.size()) + '\n';
  for (Block b : r.monochromatic_blocks) out += "  " + join_labels(b) + '\n';
  return out;
}

std::string to_json(const ColoringCensus& c) {
  return json{{"total", c.total}, {"by_red_count", c.by_red_count}}.dump() + '\n';
}

ColoringCensus census_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    return ColoringCensus{j.at("total").get<std::uint64_t>(),
                          j.at("by_red_count").get<std::vector<std::uint64_t>>()};
  });
}

std::string to_text(const ColoringCensus& c) {
  std::string out = "total " + std::to_string(c.total) + '\n';
  for (std::size_t r = 0; r < c.by_red_count.size(); ++r) {
    out += "red " + std::to_string(r) + ' ' + std::to_string(c.by_red_count[r]) + '\n';
  }
  return out;
}

std::string to_json(const StageTrace& t) {
  json j;
  j["stage1"] = traced_array(t.stage1);
  j["stage2"] = traced_array(t.stage2);
  j["stage3a"] = traced_array(t.stage3a);
  j["stage3b"] = traced_array(t.stage3b);
  j["counts"] = {t.stage1_count(), t.stage2_count(), t.stage3a_count(), t.stage3b_count()};
  return j.dump() + '\n';
}

StageTrace stage_trace_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    StageTrace t;
    t.stage1 = traced_from_json(j.at("stage1"));
    t.stage2 = traced_from_json(j.at("stage2"));
    t.stage3a = traced_from_json(j.at("stage3a"));
    t.stage3b = traced_from_json(j.at("stage3b"));
    return t;
  });
}

std::string to_text(const StageTrace& t) {
  std::string out;
  const std::pair<const char*, const std::vector<TracedBlock>*> stages[] = {
      {"1", &t.stage1}, {"2", &t.stage2}, {"3a", &t.stage3a}, {"3b", &t.stage3b}};
  for (const auto& [name, blocks] : stages) {
    if (blocks->empty()) continue;
    out += "stage " + std::string(name) + ' ' + std::to_string(blocks->size()) + '\n';
    for (const auto& tb : *blocks) {
      out += "  " + join_labels(tb.block) + "\t" + tb.source + (tb.complement ? " [complement]" : "") + '\n';
    }
  }
  return out;
}

std::string to_json(const TableValidation& v) {
  json rows = json::array();
  for (const auto& r : v.rows) {
    rows.push_back({{"stage", r.stage},
                    {"name", r.name},
                    {"a_set", r.a_set.labels()},
                    {"residual", set_array(r.residual)},
                    {"claimed", set_array(r.claimed)},
                    {"ok", r.ok},
                    {"message", r.message}});
  }
  return json{{"failures", v.failures()}, {"rows", rows}}.dump() + '\n';
}

std::string to_text(const TableValidation& v) {
  std::string out;
  for (const auto& r : v.rows) {
    out += (r.ok ? "ok   " : "FAIL ") + r.stage + ' ' + r.name;
    if (!r.ok) out += ": " + r.message;
    out += '\n';
  }
  out += "failures " + std::to_string(v.failures()) + '\n';
  return out;
}

std::string bijection_to_text(const std::vector<PointId>& pi) {
  std::string out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(i + 1) + "->" + std::to_string(pi[i].external());
  }
  return out + '\n';
}

std::string bijection_to_json(const std::vector<PointId>& pi) {
  json arr = json::array();
  for (PointId p : pi) arr.push_back(p.external());
  return json{{"bijection", arr}}.dump() + '\n';
}

std::vector<PointId> bijection_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    std::vector<PointId> pi;
    for (int v : j.at("bijection").get<std::vector<int>>()) {
      if (v < 1 || v > kMaxPoints) throw ParseError("bijection image out of range");
      pi.push_back(PointId::from_index(v - 1));
    }
    return pi;
  });
}

}  // namespace steiner
