#pragma once

// Weighted aggregation of a family of bipolar neutrosophic numbers.

#include <span>
#include <vector>

#include "bnn/bnn.hpp"

namespace bnn {

inline constexpr double kWeightSumTolerance = 1e-9;

// Nonnegative weights in [0,1] summing to one (within kWeightSumTolerance).
class WeightVector {
 public:
  // Throws EmptyWeights, WeightOutOfRange, WeightsDontSumToOne.
  explicit WeightVector(std::vector<double> weights);

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t k) const { return w_[k]; }
  std::span<const double> values() const noexcept { return w_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> w_;
};

// With `normalize` set the raw weights are divided by their sum first (which
// must be positive, otherwise ZeroWeightSum); each raw weight must still be
// finite and nonnegative.
WeightVector make_weights(std::vector<double> raw, bool normalize = false);

enum class Operator { Average, Geometric };

const char* to_string(Operator op);

// Weighted average:
//   < 1 - prod (1-T+_j)^w_j,  prod (I+_j)^w_j,  prod (F+_j)^w_j,
//     -prod (-T-_j)^w_j,  -(1 - prod (1+I-_j)^w_j),  -(1 - prod (1+F-_j)^w_j) >
// Throws EmptyFamily, LengthMismatch.
Bnn weighted_average(std::span<const Bnn> items, const WeightVector& w);

// Weighted geometric mean:
//   < prod (T+_j)^w_j,  1 - prod (1-I+_j)^w_j,  1 - prod (1-F+_j)^w_j,
//     -(1 - prod (1+T-_j)^w_j),  -prod (-I-_j)^w_j,  -prod (-F-_j)^w_j >
// Throws EmptyFamily, LengthMismatch.
Bnn weighted_geometric(std::span<const Bnn> items, const WeightVector& w);

Bnn aggregate(Operator op, std::span<const Bnn> items, const WeightVector& w);

// prod base_j^w_j over the family, with 0^0 = 1 and 0^w = 0 for w > 0.
// Evaluated in the log domain when every contributing factor is positive.
double weighted_product(std::span<const double> bases, std::span<const double> weights);

}  // namespace bnn
