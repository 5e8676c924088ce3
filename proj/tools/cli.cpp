#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "steiner/coloring.hpp"
#include "steiner/construction.hpp"
#include "steiner/io.hpp"
#include "steiner/oracle.hpp"
#include "steiner/verification.hpp"

namespace steiner::cli {

namespace {

enum class Format { text, json };

struct Options {
  Format format = Format::text;
  std::string output = "-";

  // generate
  std::string system;
  bool trace = false;

  // file arguments
  std::string input;
  std::string second_input;

  // derive
  int point = 0;

  // color
  std::string check_file;
  bool lemma1 = false;
  bool count = false;

  // oracle-build
  std::vector<int> params;
  double budget_seconds = 10.0;
  std::uint64_t max_solutions = 1;
  std::string branch = "mrv";
  bool complement_closed = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void emit(const Options& opt, const std::string& payload, std::ostream& out) {
  if (opt.output == "-") {
    out << payload;
    out.flush();
    return;
  }
  std::ofstream file(opt.output, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write '" + opt.output + "'");
  file << payload;
}

template <typename T>
std::string render(const Options& opt, const T& value) {
  return opt.format == Format::json ? to_json(value) : to_text(value);
}

int cmd_generate(const Options& opt, std::ostream& out) {
  auto [design, trace] = opt.system == "s6_12" ? build_s6_12() : build_s4_8();
  emit(opt, opt.trace ? render(opt, trace) : render(opt, design), out);
  return kOk;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
  const Design d = parse_design(slurp(opt.input, in));
  const VerificationReport report = verify_steiner(d);
  emit(opt, render(opt, report), out);
  const bool pass = report.is_steiner && report.complement_closed.value_or(true);
  return pass ? kOk : kPropertyFailure;
}

int cmd_derive(const Options& opt, std::istream& in, std::ostream& out) {
  const Design d = parse_design(slurp(opt.input, in));
  const Design derived = derive(d, PointId::from_external(opt.point, d.points()));
  emit(opt, render(opt, derived), out);
  return kOk;
}

int cmd_color(const Options& opt, std::istream& in, std::ostream& out) {
  const Design d = parse_design(slurp(opt.input, in));
  if (opt.lemma1) {
    const Coloring c = lemma1_coloring(d);
    emit(opt, opt.format == Format::json ? "{\"coloring\":\"" + c.to_string() + "\"}\n" : c.to_string() + '\n',
         out);
    return kOk;
  }
  if (opt.count) {
    emit(opt, render(opt, proper_coloring_census(d)), out);
    return kOk;
  }
  if (opt.check_file == "-" && opt.input == "-") throw InputError("design and coloring cannot both be stdin");
  const Coloring c = Coloring::parse(slurp(opt.check_file, in));
  const ColoringReport report = check_coloring(d, c);
  emit(opt, render(opt, report), out);
  return report.proper ? kOk : kPropertyFailure;
}

int cmd_spectrum(const Options& opt, std::istream& in, std::ostream& out) {
  const Design d = parse_design(slurp(opt.input, in));
  emit(opt, render(opt, intersection_spectrum(d)), out);
  return kOk;
}

int cmd_isomorphic(const Options& opt, std::istream& in, std::ostream& out) {
  if (opt.input == "-" && opt.second_input == "-") throw InputError("only one input may be stdin");
  const Design a = parse_design(slurp(opt.input, in));
  const Design b = parse_design(slurp(opt.second_input, in));
  const auto pi = isomorphic(a, b);
  if (!pi) {
    emit(opt, opt.format == Format::json ? "{\"bijection\":null}\n" : "NONE\n", out);
    return kPropertyFailure;
  }
  emit(opt, opt.format == Format::json ? bijection_to_json(*pi) : bijection_to_text(*pi), out);
  return kOk;
}

int cmd_oracle_build(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.params.size() != 3) throw InputError("--params expects s,k,n");
  const DesignParams params{opt.params[0], opt.params[1], opt.params[2]};
  SearchConfig cfg;
  cfg.max_solutions = opt.max_solutions;
  cfg.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(opt.budget_seconds * 1000.0));
  cfg.branch_order = opt.branch == "lex" ? BranchOrder::lexicographic : BranchOrder::most_constrained_first;
  cfg.complement_closed = opt.complement_closed;
  const SearchOutcome outcome = exact_cover_build(params, cfg);

  std::string payload;
  if (opt.format == Format::json) {
    payload = "[";
    for (std::size_t i = 0; i < outcome.designs.size(); ++i) {
      std::string one = to_json(outcome.designs[i]);
      one.pop_back();
      payload += (i ? "," : "") + one;
    }
    payload += "]\n";
  } else {
    for (std::size_t i = 0; i < outcome.designs.size(); ++i) {
      if (i) payload += '\n';
      payload += to_text(outcome.designs[i]);
    }
  }
  emit(opt, payload, out);
  switch (outcome.status) {
    case SearchStatus::found:
      return kOk;
    case SearchStatus::unsatisfiable:
      err << "oracle-build: no Steiner system with these parameters\n";
      return kPropertyFailure;
    case SearchStatus::timeout:
      err << "oracle-build: budget exhausted after " << outcome.nodes << " nodes\n";
      return kTimeout;
  }
  return kOk;
}

int cmd_validate_tables(const Options& opt, std::ostream& out) {
  const TableValidation report = validate_expansion_tables();
  emit(opt, opt.format == Format::json ? to_json(report) : to_text(report), out);
  return report.ok() ? kOk : kPropertyFailure;
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("--format", opt.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}}));
  sub->add_option("-o,--output", opt.output, "Output path, '-' for stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Construct and check the Steiner systems S(5,6,12) and S(3,4,8)", "steiner"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Write a constructed design");
  generate->add_option("--system", opt.system, "s6_12 or s4_8")
      ->required()
      ->check(CLI::IsMember({"s6_12", "s4_8"}));
  generate->add_flag("--trace", opt.trace, "Write per-stage provenance instead of the block list");
  add_common(generate, opt);

  auto* verify = app.add_subcommand("verify", "Check the Steiner property and complement closure");
  verify->add_option("file", opt.input, "Design file, '-' for stdin")->required();
  add_common(verify, opt);

  auto* derive_cmd = app.add_subcommand("derive", "Derived design through one point");
  derive_cmd->add_option("file", opt.input, "Design file, '-' for stdin")->required();
  derive_cmd->add_option("--point", opt.point, "1-based point")->required();
  add_common(derive_cmd, opt);

  auto* color = app.add_subcommand("color", "Proper 2-coloring checks");
  color->add_option("file", opt.input, "Design file, '-' for stdin")->required();
  auto* color_mode = color->add_option_group("mode");
  color_mode->add_option("--check", opt.check_file, "Coloring file (one line over R/B)");
  color_mode->add_flag("--lemma1", opt.lemma1, "Emit the complement-closure coloring");
  color_mode->add_flag("--count", opt.count, "Count proper colorings by exhaustive enumeration");
  color_mode->require_option(1);
  add_common(color, opt);

  auto* spectrum = app.add_subcommand("spectrum", "Block intersection histogram");
  spectrum->add_option("file", opt.input, "Design file, '-' for stdin")->required();
  add_common(spectrum, opt);

  auto* iso = app.add_subcommand("isomorphic", "Find a point bijection between two designs");
  iso->add_option("a", opt.input, "First design")->required();
  iso->add_option("b", opt.second_input, "Second design")->required();
  add_common(iso, opt);

  auto* oracle = app.add_subcommand("oracle-build", "Exact-cover search for S(s,k,n)");
  oracle->add_option("--params", opt.params, "s,k,n")->required()->delimiter(',')->expected(3);
  oracle->add_option("--budget", opt.budget_seconds, "Time budget in seconds")->check(CLI::PositiveNumber);
  oracle->add_option("--max-solutions", opt.max_solutions, "Stop after this many designs")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  oracle->add_option("--branch", opt.branch, "mrv (most constrained first) or lex")
      ->check(CLI::IsMember({"mrv", "lex"}));
  oracle->add_flag("--complement-closed", opt.complement_closed, "Pick blocks together with complements");
  add_common(oracle, opt);

  auto* tables = app.add_subcommand("validate-tables", "Check the S(5,6,12) expansion tables");
  add_common(tables, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "steiner: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (generate->parsed()) return cmd_generate(opt, out);
    if (verify->parsed()) return cmd_verify(opt, in, out);
    if (derive_cmd->parsed()) return cmd_derive(opt, in, out);
    if (color->parsed()) return cmd_color(opt, in, out);
    if (spectrum->parsed()) return cmd_spectrum(opt, in, out);
    if (iso->parsed()) return cmd_isomorphic(opt, in, out);
    if (oracle->parsed()) return cmd_oracle_build(opt, out, err);
    if (tables->parsed()) return cmd_validate_tables(opt, out);
  } catch (const ParseError& e) {
    err << "steiner: " << e.what() << '\n';
    return kInputError;
  } catch (const DesignError& e) {
    err << "steiner: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "steiner: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace steiner::cli
