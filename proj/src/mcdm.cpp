#include "bnn/mcdm.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include <fmt/format.h>

#include "bnn/error.hpp"

namespace bnn {
namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorKind::DuplicateLabel, fmt::format("duplicate {} label '{}'", what, l));
    }
  }
}

}  // namespace

DecisionProblem::DecisionProblem(std::vector<std::string> alternatives,
                                 std::vector<std::string> criteria, WeightVector weights,
                                 std::vector<std::vector<Bnn>> matrix)
    : alternatives_(std::move(alternatives)),
      criteria_(std::move(criteria)),
      weights_(std::move(weights)),
      matrix_(std::move(matrix)) {
  if (alternatives_.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "problem has no alternatives");
  }
  if (weights_.size() != criteria_.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("{} criteria but {} weights", criteria_.size(), weights_.size()));
  }
  if (matrix_.size() != alternatives_.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("{} alternatives but {} matrix rows", alternatives_.size(),
                            matrix_.size()));
  }
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (matrix_[i].size() != criteria_.size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  fmt::format("row {} has {} cells, expected {}", alternatives_[i],
                              matrix_[i].size(), criteria_.size()));
    }
  }
  require_unique(alternatives_, "alternative");
  require_unique(criteria_, "criterion");
}

DecisionProblem validate_problem(const RawProblem& raw, ValidateOptions options) {
  const std::size_t m = raw.alternatives.size();
  const std::size_t n = raw.criteria.size();
  if (m == 0) throw Error(ErrorKind::DimensionMismatch, "problem has no alternatives");
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "problem has no criteria");
  if (raw.weights.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("{} criteria but {} weights", n, raw.weights.size()));
  }
  if (raw.matrix.size() != m) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("{} alternatives but {} matrix rows", m, raw.matrix.size()));
  }

  std::vector<std::vector<Bnn>> cells(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (raw.matrix[i].size() != n) {
      throw Error(ErrorKind::DimensionMismatch,
                  fmt::format("row {} has {} cells, expected {}", raw.alternatives[i],
                              raw.matrix[i].size(), n));
    }
    cells[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto where = fmt::format("cell ({}, {})", raw.alternatives[i], raw.criteria[j]);
      const auto& tuple = raw.matrix[i][j];
      if (tuple.size() != kComponentCount) {
        throw Error(ErrorKind::WrongTupleArity,
                    fmt::format("{}: expected 6 components, got {}", where, tuple.size()));
      }
      try {
        Bnn::Components c{};
        std::copy(tuple.begin(), tuple.end(), c.begin());
        cells[i].emplace_back(c);
      } catch (const Error& e) {
        rethrow_with_context(e, where);
      }
      const double sum = component_sum(cells[i].back());
      if (sum < 0.0 || sum > 6.0) {
        throw Error(ErrorKind::ComponentOutOfRange,
                    fmt::format("{}: component sum {} is outside [0, 6]", where, sum));
      }
    }
  }

  std::optional<WeightVector> weights;
  try {
    weights.emplace(make_weights(raw.weights, options.normalize_weights));
  } catch (const Error& e) {
    rethrow_with_context(e, "weights");
  }
  return DecisionProblem(raw.alternatives, raw.criteria, std::move(*weights), std::move(cells));
}

std::vector<Bnn> aggregate_rows(const DecisionProblem& p, Operator op) {
  std::vector<Bnn> out;
  out.reserve(p.matrix().size());
  for (const auto& row : p.matrix()) out.push_back(aggregate(op, row, p.weights()));
  return out;
}

std::string RankingReport::ordering_string() const {
  std::string s;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0) s += tied_with_next[k - 1] ? " = " : " > ";
    s += alternatives[order[k]].label;
  }
  return s;
}

RankingReport rank(const DecisionProblem& p, Operator op, double tie_tolerance) {
  RankingReport report;
  report.operator_used = op;
  const auto aggregates = aggregate_rows(p, op);
  for (std::size_t i = 0; i < aggregates.size(); ++i) {
    const Bnn& a = aggregates[i];
    report.alternatives.push_back(
        {p.alternatives()[i], a, score(a), accuracy(a), certainty(a), 0});
  }

  report.order.resize(aggregates.size());
  std::iota(report.order.begin(), report.order.end(), std::size_t{0});
  std::stable_sort(report.order.begin(), report.order.end(), [&](std::size_t x, std::size_t y) {
    return compare(aggregates[x], aggregates[y], tie_tolerance) == RankOrdering::Greater;
  });

  report.tied_with_next.assign(aggregates.size() > 0 ? aggregates.size() - 1 : 0, false);
  for (std::size_t k = 0; k < report.order.size(); ++k) {
    auto& entry = report.alternatives[report.order[k]];
    if (k > 0 && compare(aggregates[report.order[k - 1]], aggregates[report.order[k]],
                         tie_tolerance) == RankOrdering::Equal) {
      report.tied_with_next[k - 1] = true;
      entry.rank = report.alternatives[report.order[k - 1]].rank;
    } else {
      entry.rank = static_cast<int>(k) + 1;
    }
  }
  return report;
}

}  // namespace bnn
