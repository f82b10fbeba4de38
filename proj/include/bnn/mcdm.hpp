#pragma once

// Multi-criteria ranking of alternatives evaluated with bipolar neutrosophic
// numbers: aggregate each row of the decision matrix, then order the aggregates
// lexicographically by score, accuracy and certainty.

#include <string>
#include <vector>

#include "bnn/aggregation.hpp"
#include "bnn/bnn.hpp"

namespace bnn {

// Unvalidated problem as read from a document. Cells are raw 6-tuples.
struct RawProblem {
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::vector<double> weights;
  std::vector<std::vector<std::vector<double>>> matrix;  // [alternative][criterion][component]
};

class DecisionProblem {
 public:
  // Checks dimensions and label uniqueness only; cells are already valid Bnn
  // values. Throws DimensionMismatch, DuplicateLabel.
  DecisionProblem(std::vector<std::string> alternatives, std::vector<std::string> criteria,
                  WeightVector weights, std::vector<std::vector<Bnn>> matrix);

  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  const std::vector<std::string>& criteria() const noexcept { return criteria_; }
  const WeightVector& weights() const noexcept { return weights_; }
  const std::vector<std::vector<Bnn>>& matrix() const noexcept { return matrix_; }
  const Bnn& cell(std::size_t alternative, std::size_t criterion) const {
    return matrix_[alternative][criterion];
  }

  friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<std::string> criteria_;
  WeightVector weights_;
  std::vector<std::vector<Bnn>> matrix_;
};

struct ValidateOptions {
  bool normalize_weights = false;
};

// Full validation of a raw problem. Errors carry the offending coordinates, e.g.
// "cell (A1, C2): component t_pos = 1.5 is outside [0, 1]".
// Throws DimensionMismatch, WrongTupleArity, ComponentOutOfRange,
// NonFiniteComponent and the weight errors.
DecisionProblem validate_problem(const RawProblem& raw, ValidateOptions options = {});

// One aggregate per alternative, in row order.
std::vector<Bnn> aggregate_rows(const DecisionProblem& p, Operator op = Operator::Average);

struct RankedAlternative {
  std::string label;
  Bnn aggregate;
  double score = 0.0;
  double accuracy = 0.0;
  double certainty = 0.0;
  int rank = 0;  // 1-based competition rank; tied alternatives share a rank
};

struct RankingReport {
  Operator operator_used = Operator::Average;
  std::vector<RankedAlternative> alternatives;  // in problem row order
  // Alternative indices from best to worst, and for each adjacent pair whether
  // the two are tied ("=") rather than strictly ordered (">").
  std::vector<std::size_t> order;
  std::vector<bool> tied_with_next;

  // e.g. "A3 > A4 > A2 > A1" or "A1 = A2 > A3".
  std::string ordering_string() const;
};

RankingReport rank(const DecisionProblem& p, Operator op = Operator::Average,
                   double tie_tolerance = kDefaultTieTolerance);

}  // namespace bnn
