#include "cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "bnn/bnn.hpp"
#include "bnn/bns_set.hpp"
#include "bnn/error.hpp"
#include "bnn/io.hpp"
#include "bnn/mcdm.hpp"

namespace bnn::cli {
namespace {

constexpr const char* kSynopsis =
    "usage:\n"
    "  bnn rank --input FILE [--operator avg|geo] [--output table|json] [--precision N]\n"
    "           [--normalize-weights]\n"
    "  bnn score --bnn \"t+,i+,f+,t-,i-,f-\"\n"
    "  bnn setop union|intersection|complement --a FILE [--b FILE]\n";

struct UsageError {
  std::string message;
};

struct RankArgs {
  std::string input;
  std::string op = "avg";
  std::string output = "table";
  int precision = kDefaultPrecision;
  bool normalize = false;
};

struct SetopArgs {
  std::string operation;
  std::string a;
  std::string b;
};

void run_rank(const RankArgs& args, std::ostream& out) {
  const auto bytes = read_file(args.input);
  const auto problem = parse_problem(bytes, format_for_path(args.input),
                                     ValidateOptions{.normalize_weights = args.normalize});
  const auto op = args.op == "geo" ? Operator::Geometric : Operator::Average;
  const auto report = rank(problem, op);
  const auto style = args.output == "json" ? ReportStyle::Json : ReportStyle::Table;
  out << render_report(report, style, args.precision);
}

void run_score(const std::string& text, std::ostream& out) {
  const Bnn a = parse_bnn(text);
  out << fmt::format("score: {:.6f}\naccuracy: {:.6f}\ncertainty: {:.6f}\n", score(a),
                     accuracy(a), certainty(a));
}

void run_setop(const SetopArgs& args, std::ostream& out) {
  const bool binary = args.operation != "complement";
  if (binary && args.b.empty()) throw UsageError{args.operation + " requires --b FILE"};
  if (!binary && !args.b.empty()) throw UsageError{"complement takes only --a FILE"};

  const BnsSet a = parse_set_json(read_file(args.a));
  BnsSet result;
  if (!binary) {
    result = complement(a);
  } else {
    const BnsSet b = parse_set_json(read_file(args.b));
    result = args.operation == "union" ? set_union(a, b) : set_intersection(a, b);
  }
  out << render_set_json(result);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipolar neutrosophic decision making", "bnn"};
  app.require_subcommand(1);

  RankArgs rank_args;
  auto* rank_cmd = app.add_subcommand("rank", "Aggregate and rank the alternatives of a problem");
  rank_cmd->add_option("--input", rank_args.input, "Problem file (.json or .csv)")->required();
  rank_cmd->add_option("--operator", rank_args.op, "Aggregation operator")
      ->check(CLI::IsMember({"avg", "geo"}))
      ->capture_default_str();
  rank_cmd->add_option("--output", rank_args.output, "Report style")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  rank_cmd->add_option("--precision", rank_args.precision, "Decimals in table output")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();
  rank_cmd->add_flag("--normalize-weights", rank_args.normalize,
                     "Divide the weights by their sum instead of requiring they sum to 1");

  std::string bnn_text;
  auto* score_cmd = app.add_subcommand("score", "Print score, accuracy and certainty of a value");
  score_cmd->add_option("--bnn", bnn_text, "Six comma-separated components")->required();

  SetopArgs setop_args;
  auto* setop_cmd = app.add_subcommand("setop", "Union, intersection or complement of sets");
  setop_cmd->add_option("operation", setop_args.operation, "union|intersection|complement")
      ->required()
      ->check(CLI::IsMember({"union", "intersection", "complement"}));
  setop_cmd->add_option("--a", setop_args.a, "First set (JSON)")->required();
  setop_cmd->add_option("--b", setop_args.b, "Second set (JSON)");

  try {
    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(),
                                      args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis;
    return kExitUsage;
  }

  try {
    if (rank_cmd->parsed()) run_rank(rank_args, out);
    if (score_cmd->parsed()) run_score(bnn_text, out);
    if (setop_cmd->parsed()) run_setop(setop_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n" << kSynopsis;
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace bnn::cli
