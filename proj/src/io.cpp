#include "bnn/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "bnn/error.hpp"
#include "text.hpp"

namespace bnn {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& message) {
  throw Error(ErrorKind::MalformedDocument, message);
}

json parse_json_document(std::string_view bytes) {
  try {
    return json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    // Byte offsets from nlohmann are 1-based and point just past the failure.
    const std::size_t offset = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, bytes.size());
    const auto before = bytes.substr(0, offset);
    const std::size_t line = 1 + std::count(before.begin(), before.end(), '\n');
    const auto nl = before.rfind('\n');
    const std::size_t column = nl == std::string_view::npos ? offset + 1 : offset - nl;
    malformed(fmt::format("invalid JSON at line {}, column {}", line, column));
  }
}

const json& member(const json& doc, const char* key) {
  if (!doc.is_object()) malformed("document root must be a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) malformed(fmt::format("missing \"{}\"", key));
  return *it;
}

std::vector<std::string> string_list(const json& value, const char* key) {
  if (!value.is_array()) malformed(fmt::format("\"{}\" must be an array of strings", key));
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) malformed(fmt::format("\"{}\" must be an array of strings", key));
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<double> number_list(const json& value, const std::string& where) {
  if (!value.is_array()) malformed(fmt::format("{} must be an array of numbers", where));
  std::vector<double> out;
  for (const auto& item : value) {
    if (!item.is_number()) malformed(fmt::format("{} must be an array of numbers", where));
    out.push_back(item.get<double>());
  }
  return out;
}

std::string label_at(const std::vector<std::string>& labels, std::size_t k, const char* prefix) {
  return k < labels.size() ? labels[k] : fmt::format("{}{}", prefix, k + 1);
}

// Shortest representation that parses back to the same double.
std::string number_text(double v) { return fmt::format("{}", v); }

void check_csv_label(const std::string& label, bool alternative) {
  const bool bad = label.empty() || label.find_first_of(",|\r\n") != std::string::npos ||
                   detail::trim(label) != label || (alternative && label.front() == '#');
  if (bad) malformed(fmt::format("label '{}' cannot be written as a CSV field", label));
}

}  // namespace

DecisionProblem parse_problem_json(std::string_view bytes, ValidateOptions options) {
  const json doc = parse_json_document(bytes);
  RawProblem raw;
  raw.alternatives = string_list(member(doc, "alternatives"), "alternatives");
  raw.criteria = string_list(member(doc, "criteria"), "criteria");
  raw.weights = number_list(member(doc, "weights"), "\"weights\"");

  const json& matrix = member(doc, "matrix");
  if (!matrix.is_array()) malformed("\"matrix\" must be an array of rows");
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const auto row_label = label_at(raw.alternatives, i, "row ");
    if (!matrix[i].is_array()) malformed(fmt::format("matrix row {} must be an array", row_label));
    auto& row = raw.matrix.emplace_back();
    for (std::size_t j = 0; j < matrix[i].size(); ++j) {
      row.push_back(number_list(matrix[i][j],
                                fmt::format("cell ({}, {})", row_label,
                                            label_at(raw.criteria, j, "column "))));
    }
  }
  return validate_problem(raw, options);
}

DecisionProblem parse_problem_csv(std::string_view bytes, ValidateOptions options) {
  struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
  };
  std::vector<Line> lines;
  std::size_t number = 0;
  for (auto text : detail::split(bytes, '\n')) {
    ++number;
    if (detail::trim(text).empty()) continue;
    auto fields = detail::split(text, ',');
    for (auto& f : fields) f = detail::trim(f);
    lines.push_back({number, std::move(fields)});
  }
  if (lines.empty()) malformed("CSV document is empty");

  RawProblem raw;
  const auto& header = lines.front();
  for (std::size_t c = 1; c < header.fields.size(); ++c) {
    raw.criteria.emplace_back(header.fields[c]);
  }
  const std::size_t n = raw.criteria.size();

  std::size_t first_data = 1;
  if (lines.size() > 1 && lines[1].fields.front() == "#weights") {
    const auto& w = lines[1];
    if (w.fields.size() != n + 1) {
      throw Error(ErrorKind::DimensionMismatch,
                  fmt::format("line {}: {} weights for {} criteria", w.number,
                              w.fields.size() - 1, n));
    }
    for (std::size_t c = 1; c < w.fields.size(); ++c) {
      const auto v = detail::parse_double(w.fields[c]);
      if (!v) {
        malformed(fmt::format("line {}, column {}: weight '{}' is not a number", w.number,
                              c + 1, w.fields[c]));
      }
      raw.weights.push_back(*v);
    }
    first_data = 2;
  } else {
    raw.weights.assign(n, n > 0 ? 1.0 / static_cast<double>(n) : 0.0);
  }

  for (std::size_t r = first_data; r < lines.size(); ++r) {
    const auto& line = lines[r];
    const std::string label(line.fields.front());
    raw.alternatives.push_back(label);
    if (line.fields.size() != n + 1) {
      throw Error(ErrorKind::DimensionMismatch,
                  fmt::format("line {}: row {} has {} cells, expected {}", line.number, label,
                              line.fields.size() - 1, n));
    }
    auto& row = raw.matrix.emplace_back();
    for (std::size_t c = 1; c < line.fields.size(); ++c) {
      const auto where = fmt::format("line {}, column {}, cell ({}, {})", line.number, c + 1,
                                     label, raw.criteria[c - 1]);
      const auto parts = detail::split(line.fields[c], '|');
      if (parts.size() != kComponentCount) {
        throw Error(ErrorKind::WrongTupleArity,
                    fmt::format("{}: expected 6 '|'-separated components, got {}", where,
                                parts.size()));
      }
      auto& cell = row.emplace_back();
      for (const auto part : parts) {
        const auto v = detail::parse_double(part);
        if (!v) malformed(fmt::format("{}: '{}' is not a number", where, detail::trim(part)));
        cell.push_back(*v);
      }
      try {
        Bnn::Components comps{};
        std::copy(cell.begin(), cell.end(), comps.begin());
        (void)Bnn(comps);
      } catch (const Error& e) {
        rethrow_with_context(e, where);
      }
    }
  }

  return validate_problem(raw, options);
}

DecisionProblem parse_problem(std::string_view bytes, ProblemFormat format,
                              ValidateOptions options) {
  return format == ProblemFormat::Csv ? parse_problem_csv(bytes, options)
                                      : parse_problem_json(bytes, options);
}

std::string render_problem_json(const DecisionProblem& p) {
  ordered_json doc;
  doc["alternatives"] = p.alternatives();
  doc["criteria"] = p.criteria();
  doc["weights"] = std::vector<double>(p.weights().values().begin(), p.weights().values().end());
  ordered_json matrix = ordered_json::array();
  for (const auto& row : p.matrix()) {
    ordered_json cells = ordered_json::array();
    for (const auto& cell : row) cells.push_back(cell.components());
    matrix.push_back(std::move(cells));
  }
  doc["matrix"] = std::move(matrix);
  return doc.dump(2) + "\n";
}

std::string render_problem_csv(const DecisionProblem& p) {
  std::string out = "alternative";
  for (const auto& c : p.criteria()) {
    check_csv_label(c, false);
    out += "," + c;
  }
  out += "\n#weights";
  for (const double w : p.weights().values()) out += "," + number_text(w);
  out += "\n";
  for (std::size_t i = 0; i < p.alternatives().size(); ++i) {
    check_csv_label(p.alternatives()[i], true);
    out += p.alternatives()[i];
    for (const auto& cell : p.matrix()[i]) {
      const auto& c = cell.components();
      out += fmt::format(",{}|{}|{}|{}|{}|{}", number_text(c[0]), number_text(c[1]),
                         number_text(c[2]), number_text(c[3]), number_text(c[4]),
                         number_text(c[5]));
    }
    out += "\n";
  }
  return out;
}

ProblemFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return ext == ".csv" ? ProblemFormat::Csv : ProblemFormat::Json;
}

BnsSet parse_set_json(std::string_view bytes) {
  const json doc = parse_json_document(bytes);
  auto universe = string_list(member(doc, "universe"), "universe");
  const json& membership = member(doc, "membership");
  if (!membership.is_object()) malformed("\"membership\" must be an object");
  std::vector<BnsSet::Assignment> assignments;
  for (const auto& [label, value] : membership.items()) {
    const auto where = fmt::format("element '{}'", label);
    const auto tuple = number_list(value, where);
    if (tuple.size() != kComponentCount) {
      throw Error(ErrorKind::WrongTupleArity,
                  fmt::format("{}: expected 6 components, got {}", where, tuple.size()));
    }
    try {
      Bnn::Components c{};
      std::copy(tuple.begin(), tuple.end(), c.begin());
      assignments.emplace_back(label, Bnn(c));
    } catch (const Error& e) {
      rethrow_with_context(e, where);
    }
  }
  return make_set(std::move(universe), assignments);
}

std::string render_set_json(const BnsSet& s) {
  ordered_json doc;
  doc["universe"] = s.universe();
  ordered_json membership = ordered_json::object();
  for (std::size_t k = 0; k < s.size(); ++k) {
    membership[s.universe()[k]] = s.values()[k].components();
  }
  doc["membership"] = std::move(membership);
  return doc.dump(2) + "\n";
}

std::string render_report(const RankingReport& r, ReportStyle style, int precision) {
  if (style == ReportStyle::Json) {
    ordered_json doc;
    doc["operator"] = to_string(r.operator_used);
    ordered_json alts = ordered_json::array();
    for (const auto& a : r.alternatives) {
      ordered_json entry;
      entry["label"] = a.label;
      entry["aggregate"] = a.aggregate.components();
      entry["score"] = a.score;
      entry["accuracy"] = a.accuracy;
      entry["certainty"] = a.certainty;
      entry["rank"] = a.rank;
      alts.push_back(std::move(entry));
    }
    doc["alternatives"] = std::move(alts);
    ordered_json order = ordered_json::array();
    for (const auto k : r.order) order.push_back(r.alternatives[k].label);
    doc["order"] = std::move(order);
    doc["ordering"] = r.ordering_string();
    return doc.dump(2) + "\n";
  }

  precision = std::clamp(precision, 0, 17);
  std::size_t label_width = std::string_view("alternative").size();
  for (const auto& a : r.alternatives) label_width = std::max(label_width, a.label.size());

  // The angle brackets are 3-byte UTF-8 sequences that occupy one column each.
  std::vector<std::string> tuples;
  std::size_t tuple_width = std::string_view("aggregate").size();
  for (const auto& a : r.alternatives) {
    tuples.push_back(to_string(a.aggregate, precision));
    tuple_width = std::max(tuple_width, tuples.back().size() - 4);
  }
  const std::size_t num_width = static_cast<std::size_t>(precision) + 3;
  const std::size_t col = std::max<std::size_t>(num_width, 9);

  std::string out = fmt::format("operator: {}\n", to_string(r.operator_used));
  out += fmt::format("{:<{}}  {:<{}}  {:>{}}  {:>{}}  {:>{}}  {:>4}\n", "alternative",
                     label_width, "aggregate", tuple_width, "score", col, "accuracy", col,
                     "certainty", col, "rank");
  for (std::size_t k = 0; k < r.alternatives.size(); ++k) {
    const auto& a = r.alternatives[k];
    const std::string pad(tuple_width - (tuples[k].size() - 4), ' ');
    out += fmt::format("{:<{}}  {}{}  {:>{}.{}f}  {:>{}.{}f}  {:>{}.{}f}  {:>4}\n", a.label,
                       label_width, tuples[k], pad, a.score, col, precision, a.accuracy, col,
                       precision, a.certainty, col, precision, a.rank);
  }
  out += r.ordering_string() + "\n";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, fmt::format("error reading '{}'", path.string()));
  return buffer.str();
}

}  // namespace bnn
