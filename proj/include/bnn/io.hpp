#pragma once

// Document formats.
//
// Problem JSON:
//   {"alternatives": ["A1", ...], "criteria": ["C1", ...], "weights": [0.5, ...],
//    "matrix": [[[t+, i+, f+, t-, i-, f-], ...], ...]}
//
// Problem CSV:
//   alternative,C1,C2,...          header; first field names the label column
//   #weights,0.5,0.25,...          optional; equal weights when absent
//   A1,0.5|0.7|0.2|-0.7|-0.3|-0.6,...
//
// Set JSON:
//   {"universe": ["x1", ...], "membership": {"x1": [t+, i+, f+, t-, i-, f-], ...}}
//
// Numbers are written in shortest round-trip form and parsed independently of
// the process locale.

#include <filesystem>
#include <string>
#include <string_view>

#include "bnn/bns_set.hpp"
#include "bnn/mcdm.hpp"

namespace bnn {

enum class ProblemFormat { Json, Csv };

DecisionProblem parse_problem_json(std::string_view bytes, ValidateOptions options = {});
DecisionProblem parse_problem_csv(std::string_view bytes, ValidateOptions options = {});
DecisionProblem parse_problem(std::string_view bytes, ProblemFormat format,
                              ValidateOptions options = {});

std::string render_problem_json(const DecisionProblem& p);
// Throws MalformedDocument if a label cannot be written unambiguously as CSV
// (contains ',', '|', a line break, surrounding whitespace, or an alternative
// label starts with '#').
std::string render_problem_csv(const DecisionProblem& p);

// ".csv" (any case) selects CSV, anything else JSON.
ProblemFormat format_for_path(const std::filesystem::path& path);

BnsSet parse_set_json(std::string_view bytes);
std::string render_set_json(const BnsSet& s);

enum class ReportStyle { Table, Json };

inline constexpr int kDefaultPrecision = 3;

// Table style prints each alternative's aggregate, score, accuracy, certainty
// and rank at `precision` decimals, and ends with the ordering line. Json style
// ignores `precision` and writes every number at full precision.
std::string render_report(const RankingReport& r, ReportStyle style,
                          int precision = kDefaultPrecision);

// Throws Error(Io) when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace bnn
