#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "bnn/error.hpp"
#include "bnn/io.hpp"
#include "bnn/mcdm.hpp"
#include "support.hpp"

namespace bnn {
namespace {

using testing::Gen;
using testing::max_abs_diff;

RawProblem car_raw() {
  RawProblem raw;
  raw.alternatives = {"A1", "A2", "A3", "A4"};
  raw.criteria = {"C1", "C2", "C3", "C4"};
  raw.weights = {0.5, 0.25, 0.125, 0.125};
  raw.matrix = {
      {{0.5, 0.7, 0.2, -0.7, -0.3, -0.6}, {0.4, 0.4, 0.5, -0.7, -0.8, -0.4},
       {0.7, 0.7, 0.5, -0.8, -0.7, -0.6}, {0.1, 0.5, 0.7, -0.5, -0.2, -0.8}},
      {{0.9, 0.7, 0.5, -0.7, -0.7, -0.1}, {0.7, 0.6, 0.8, -0.7, -0.5, -0.1},
       {0.9, 0.4, 0.6, -0.1, -0.7, -0.5}, {0.5, 0.2, 0.7, -0.5, -0.1, -0.9}},
      {{0.3, 0.4, 0.2, -0.6, -0.3, -0.7}, {0.2, 0.2, 0.2, -0.4, -0.7, -0.4},
       {0.9, 0.5, 0.5, -0.6, -0.5, -0.2}, {0.7, 0.5, 0.3, -0.4, -0.2, -0.2}},
      {{0.9, 0.7, 0.2, -0.8, -0.6, -0.1}, {0.3, 0.5, 0.2, -0.5, -0.5, -0.2},
       {0.5, 0.4, 0.5, -0.1, -0.7, -0.2}, {0.4, 0.2, 0.8, -0.5, -0.5, -0.6}}};
  return raw;
}

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error raised";
  return Error(ErrorKind::Io, "");
}

DecisionProblem two_rows(const Bnn& a, const Bnn& b) {
  return DecisionProblem({"A1", "A2"}, {"C1"}, make_weights({1.0}), {{a}, {b}});
}

TEST(ValidateProblem, CarProblemAccepted) {
  const auto p = validate_problem(car_raw());
  EXPECT_EQ(p.alternatives().size(), 4u);
  EXPECT_EQ(p.criteria().size(), 4u);
  EXPECT_EQ(p.weights()[2], 0.125);
  EXPECT_EQ(p.cell(3, 3), Bnn(0.4, 0.2, 0.8, -0.5, -0.5, -0.6));
}

TEST(ValidateProblem, WeightCountMismatch) {
  auto raw = car_raw();
  raw.weights = {0.5, 0.25, 0.25};
  EXPECT_EQ(error_of([&] { validate_problem(raw); }).kind(), ErrorKind::DimensionMismatch);
}

TEST(ValidateProblem, RowShapeMismatch) {
  auto raw = car_raw();
  raw.matrix[2].pop_back();
  EXPECT_EQ(error_of([&] { validate_problem(raw); }).kind(), ErrorKind::DimensionMismatch);
  raw = car_raw();
  raw.matrix.pop_back();
  EXPECT_EQ(error_of([&] { validate_problem(raw); }).kind(), ErrorKind::DimensionMismatch);
}

TEST(ValidateProblem, OutOfRangeCellNamesCoordinates) {
  auto raw = car_raw();
  raw.matrix[0][1][0] = 1.5;
  const Error e = error_of([&] { validate_problem(raw); });
  EXPECT_EQ(e.kind(), ErrorKind::ComponentOutOfRange);
  EXPECT_NE(std::string(e.what()).find("(A1, C2)"), std::string::npos) << e.what();
  EXPECT_NE(std::string(e.what()).find("t_pos"), std::string::npos) << e.what();
}

TEST(ValidateProblem, TupleArity) {
  auto raw = car_raw();
  raw.matrix[0][1].pop_back();
  const Error e = error_of([&] { validate_problem(raw); });
  EXPECT_EQ(e.kind(), ErrorKind::WrongTupleArity);
  EXPECT_NE(std::string(e.what()).find("(A1, C2)"), std::string::npos) << e.what();
}

TEST(ValidateProblem, WeightErrorsPropagate) {
  auto raw = car_raw();
  raw.weights = {0.5, 0.25, 0.125, 0.0};
  EXPECT_EQ(error_of([&] { validate_problem(raw); }).kind(), ErrorKind::WeightsDontSumToOne);
  EXPECT_NO_THROW(validate_problem(raw, {.normalize_weights = true}));
  raw.weights = {0.0, 0.0, 0.0, 0.0};
  EXPECT_EQ(error_of([&] { validate_problem(raw, {.normalize_weights = true}); }).kind(),
            ErrorKind::ZeroWeightSum);
}

TEST(ValidateProblem, DuplicateLabels) {
  auto raw = car_raw();
  raw.alternatives[1] = "A1";
  EXPECT_EQ(error_of([&] { validate_problem(raw); }).kind(), ErrorKind::DuplicateLabel);
}

TEST(AggregateRows, CarProblemAverage) {
  const auto rows = aggregate_rows(validate_problem(car_raw()));
  ASSERT_EQ(rows.size(), 4u);
  const Bnn::Components a3{0.489, 0.355, 0.235, -0.515, -0.447, -0.544};
  for (std::size_t k = 0; k < kComponentCount; ++k) {
    EXPECT_NEAR(rows[2].components()[k], a3[k], 0.001);
  }
}

TEST(AggregateRows, SingleCriterionIsIdentity) {
  Gen gen;
  const Bnn a = gen.bnn();
  const Bnn b = gen.bnn();
  const auto p = two_rows(a, b);
  for (const auto op : {Operator::Average, Operator::Geometric}) {
    const auto rows = aggregate_rows(p, op);
    EXPECT_EQ(rows[0], a);
    EXPECT_EQ(rows[1], b);
  }
}

TEST(AggregateRows, CarProblemGeometricMatchesOracle) {
  const auto p = validate_problem(car_raw());
  const auto rows = aggregate_rows(p, Operator::Geometric);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto expected = testing::oracle_weighted_geometric(p.matrix()[i], p.weights());
    EXPECT_LE(max_abs_diff(rows[i], expected), 1e-12);
  }
}

TEST(Rank, CarProblemAverage) {
  const auto r = rank(validate_problem(car_raw()));
  const double expected[] = {0.50, 0.52, 0.56, 0.54};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(r.alternatives[i].score, expected[i], 0.005);
  EXPECT_EQ(r.ordering_string(), "A3 > A4 > A2 > A1");
  EXPECT_EQ(r.alternatives[2].rank, 1);
  EXPECT_EQ(r.alternatives[3].rank, 2);
  EXPECT_EQ(r.alternatives[1].rank, 3);
  EXPECT_EQ(r.alternatives[0].rank, 4);
  EXPECT_EQ(r.operator_used, Operator::Average);
}

TEST(Rank, CarProblemGeometric) {
  // 50-digit scores: 0.44134, 0.42964, 0.49833, 0.45042.
  const auto r = rank(validate_problem(car_raw()), Operator::Geometric);
  EXPECT_EQ(r.ordering_string(), "A3 > A4 > A1 > A2");
  EXPECT_NEAR(r.alternatives[2].score, 0.49832538211066155449, 1e-12);
}

TEST(Rank, IdenticalRowsTie) {
  const Bnn a(0.6, 0.2, 0.3, -0.4, -0.2, -0.3);
  const auto p = DecisionProblem({"A1", "A2", "A3"}, {"C1"}, make_weights({1.0}),
                                 {{Bnn(0.1, 0.9, 0.9, -0.1, -0.9, -0.1)}, {a}, {a}});
  const auto r = rank(p);
  EXPECT_EQ(r.ordering_string(), "A2 = A3 > A1");
  EXPECT_EQ(r.alternatives[1].rank, 1);
  EXPECT_EQ(r.alternatives[2].rank, 1);
  EXPECT_EQ(r.alternatives[0].rank, 3);
}

TEST(Rank, AccuracyTierOrders) {
  const auto r = rank(two_rows(Bnn(0.5, 0.4, 0.6, -0.5, -0.5, -0.5),
                               Bnn(0.5, 0.5, 0.5, -0.5, -0.5, -0.5)));
  EXPECT_NEAR(r.alternatives[0].score, r.alternatives[1].score, 1e-15);
  EXPECT_EQ(r.ordering_string(), "A2 > A1");
}

TEST(Rank, CompetitionRanking) {
  const Bnn hi(0.9, 0.1, 0.1, -0.1, -0.1, -0.9);
  const Bnn mid(0.5, 0.5, 0.5, -0.5, -0.5, -0.5);
  const Bnn lo(0.1, 0.9, 0.9, -0.9, -0.9, -0.1);
  const auto p = DecisionProblem({"A", "B", "C", "D"}, {"C1"}, make_weights({1.0}),
                                 {{mid}, {hi}, {mid}, {lo}});
  const auto r = rank(p);
  EXPECT_EQ(r.ordering_string(), "B > A = C > D");
  std::vector<int> ranks;
  for (const auto& a : r.alternatives) ranks.push_back(a.rank);
  EXPECT_EQ(ranks, (std::vector<int>{2, 1, 2, 4}));
}

// ---- properties ----

TEST(RankProperties, ConsistentWithPairwiseCompare) {
  Gen gen;
  for (int k = 0; k < 300; ++k) {
    const auto p = gen.problem(1 + gen.index(7), 1 + gen.index(5));
    for (const auto op : {Operator::Average, Operator::Geometric}) {
      const auto r = rank(p, op);
      std::vector<std::size_t> seen(r.order);
      std::sort(seen.begin(), seen.end());
      std::vector<std::size_t> all(p.alternatives().size());
      std::iota(all.begin(), all.end(), std::size_t{0});
      EXPECT_EQ(seen, all);
      for (std::size_t i = 0; i < r.alternatives.size(); ++i) {
        for (std::size_t j = 0; j < r.alternatives.size(); ++j) {
          const auto c = compare(r.alternatives[i].aggregate, r.alternatives[j].aggregate);
          const int ri = r.alternatives[i].rank;
          const int rj = r.alternatives[j].rank;
          if (c == RankOrdering::Greater) EXPECT_LT(ri, rj);
          if (c == RankOrdering::Less) EXPECT_GT(ri, rj);
          if (c == RankOrdering::Equal) EXPECT_EQ(ri, rj);
        }
      }
    }
  }
}

TEST(RankProperties, RowPermutationEquivariant) {
  Gen gen;
  for (int k = 0; k < 300; ++k) {
    const std::size_t m = 1 + gen.index(6);
    const auto p = gen.problem(m, 1 + gen.index(5));
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), gen.engine());
    std::vector<std::string> labels;
    std::vector<std::vector<Bnn>> matrix;
    for (const auto i : perm) {
      labels.push_back(p.alternatives()[i]);
      matrix.push_back(p.matrix()[i]);
    }
    const DecisionProblem q(labels, p.criteria(), p.weights(), matrix);
    const auto rp = rank(p);
    const auto rq = rank(q);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& a = rp.alternatives[perm[i]];
      const auto& b = rq.alternatives[i];
      EXPECT_EQ(a.label, b.label);
      EXPECT_EQ(a.aggregate, b.aggregate);
      EXPECT_EQ(a.rank, b.rank);
    }
  }
}

TEST(RankProperties, CriterionPermutationInvariant) {
  Gen gen;
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + gen.index(6);
    const auto p = gen.problem(1 + gen.index(6), n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), gen.engine());
    std::vector<std::string> criteria;
    std::vector<double> weights;
    std::vector<std::vector<Bnn>> matrix(p.alternatives().size());
    for (const auto j : perm) {
      criteria.push_back(p.criteria()[j]);
      weights.push_back(p.weights()[j]);
      for (std::size_t i = 0; i < matrix.size(); ++i) matrix[i].push_back(p.matrix()[i][j]);
    }
    const DecisionProblem q(p.alternatives(), criteria, WeightVector(weights), matrix);
    for (const auto op : {Operator::Average, Operator::Geometric}) {
      const auto rp = rank(p, op);
      const auto rq = rank(q, op);
      for (std::size_t i = 0; i < rp.alternatives.size(); ++i) {
        EXPECT_LE(max_abs_diff(rp.alternatives[i].aggregate, rq.alternatives[i].aggregate), 1e-12);
        EXPECT_EQ(rp.alternatives[i].rank, rq.alternatives[i].rank);
      }
    }
  }
}

TEST(RankProperties, ZeroWeightCriterionDeletion) {
  Gen gen;
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + gen.index(5);
    const std::size_t m = 1 + gen.index(6);
    std::vector<double> raw(n);
    for (auto& x : raw) x = gen.uniform(0.05, 1.0);
    const std::size_t dropped = gen.index(n);
    raw[dropped] = 0.0;
    const auto w = make_weights(raw, true);
    std::vector<std::vector<Bnn>> matrix(m);
    for (auto& row : matrix) row = gen.family(n);
    const DecisionProblem p(gen.labels(m, "A"), gen.labels(n, "C"), w, matrix);

    std::vector<std::string> criteria;
    std::vector<double> kept_w;
    std::vector<std::vector<Bnn>> kept(m);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == dropped) continue;
      criteria.push_back(p.criteria()[j]);
      kept_w.push_back(w[j]);
      for (std::size_t i = 0; i < m; ++i) kept[i].push_back(matrix[i][j]);
    }
    const DecisionProblem q(p.alternatives(), criteria, WeightVector(kept_w), kept);
    for (const auto op : {Operator::Average, Operator::Geometric}) {
      EXPECT_EQ(render_report(rank(p, op), ReportStyle::Json),
                render_report(rank(q, op), ReportStyle::Json));
    }
  }
}

TEST(RankProperties, Deterministic) {
  Gen gen;
  const auto p = gen.problem(6, 4);
  const auto first = render_report(rank(p), ReportStyle::Json);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(render_report(rank(p), ReportStyle::Json), first);
}

}  // namespace
}  // namespace bnn
