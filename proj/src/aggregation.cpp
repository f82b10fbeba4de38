#include "bnn/aggregation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "bnn/error.hpp"

namespace bnn {
namespace {

void check_family(std::span<const Bnn> items, const WeightVector& w) {
  if (items.empty()) throw Error(ErrorKind::EmptyFamily, "cannot aggregate an empty family");
  if (items.size() != w.size()) {
    throw Error(ErrorKind::LengthMismatch,
                fmt::format("{} values but {} weights", items.size(), w.size()));
  }
}

// 1 - prod (1-x_j)^w_j, via log1p/expm1 so that small magnitudes keep their
// relative precision.
double weighted_coproduct(std::span<const double> magnitudes, std::span<const double> weights) {
  double log_sum = 0.0;
  for (std::size_t j = 0; j < magnitudes.size(); ++j) {
    if (weights[j] == 0.0) continue;
    if (magnitudes[j] >= 1.0) return 1.0;
    log_sum += weights[j] * std::log1p(-magnitudes[j]);
  }
  return -std::expm1(log_sum);
}

// How a component is pooled: either as prod x^w ("product") or as
// 1 - prod (1-x)^w ("coproduct") on the magnitude |x| of the component.
enum class Pool { Product, Coproduct };

// Per-component pooling rule for each operator, in <T+,I+,F+,T-,I-,F-> order.
constexpr std::array<Pool, kComponentCount> kAveragePools{
    Pool::Coproduct, Pool::Product, Pool::Product,
    Pool::Product,   Pool::Coproduct, Pool::Coproduct};
constexpr std::array<Pool, kComponentCount> kGeometricPools{
    Pool::Product,   Pool::Coproduct, Pool::Coproduct,
    Pool::Coproduct, Pool::Product,   Pool::Product};

Bnn pool_family(std::span<const Bnn> items, const WeightVector& w,
                const std::array<Pool, kComponentCount>& pools) {
  check_family(items, w);
  Bnn::Components out{};
  std::vector<double> bases(items.size());
  for (std::size_t c = 0; c < kComponentCount; ++c) {
    const double sign = c >= 3 ? -1.0 : 1.0;
    // Range of the component over the items that carry weight.
    double lo = 1.0;
    double hi = -1.0;
    for (std::size_t j = 0; j < items.size(); ++j) {
      const double v = items[j].components()[c];
      if (w[j] > 0.0) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      bases[j] = sign * v;
    }
    const double magnitude = pools[c] == Pool::Product
                                 ? weighted_product(bases, w.values())
                                 : weighted_coproduct(bases, w.values());
    // The exact result is a quasi-arithmetic mean of the inputs; clamping only
    // removes round-off.
    out[c] = std::clamp(sign * magnitude, lo, hi);
  }
  return Bnn::from_computed(out);
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw Error(ErrorKind::EmptyWeights, "weight vector is empty");
  double sum = 0.0;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (!std::isfinite(w_[k]) || w_[k] < 0.0 || w_[k] > 1.0) {
      throw Error(ErrorKind::WeightOutOfRange,
                  fmt::format("weight {} = {} is outside [0, 1]", k + 1, w_[k]));
    }
    sum += w_[k];
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorKind::WeightsDontSumToOne,
                fmt::format("weights sum to {}, expected 1", sum));
  }
}

WeightVector make_weights(std::vector<double> raw, bool normalize) {
  if (raw.empty()) throw Error(ErrorKind::EmptyWeights, "weight vector is empty");
  if (normalize) {
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (!std::isfinite(raw[k]) || raw[k] < 0.0) {
        throw Error(ErrorKind::WeightOutOfRange,
                    fmt::format("weight {} = {} must be finite and nonnegative", k + 1, raw[k]));
      }
    }
    const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
    if (!(sum > 0.0)) throw Error(ErrorKind::ZeroWeightSum, "weights sum to zero");
    for (double& x : raw) x /= sum;
  }
  return WeightVector(std::move(raw));
}

const char* to_string(Operator op) {
  return op == Operator::Average ? "average" : "geometric";
}

double weighted_product(std::span<const double> bases, std::span<const double> weights) {
  double log_sum = 0.0;
  for (std::size_t j = 0; j < bases.size(); ++j) {
    if (weights[j] == 0.0) continue;  // x^0 = 1, including 0^0
    if (bases[j] <= 0.0) return 0.0;
    log_sum += weights[j] * std::log(bases[j]);
  }
  return std::exp(log_sum);
}

Bnn weighted_average(std::span<const Bnn> items, const WeightVector& w) {
  return pool_family(items, w, kAveragePools);
}

Bnn weighted_geometric(std::span<const Bnn> items, const WeightVector& w) {
  return pool_family(items, w, kGeometricPools);
}

Bnn aggregate(Operator op, std::span<const Bnn> items, const WeightVector& w) {
  return op == Operator::Average ? weighted_average(items, w) : weighted_geometric(items, w);
}

}  // namespace bnn
