#pragma once

// Shared helpers for the test suites: seeded generators of valid values and an
// independent 50-digit evaluator of the aggregation operators.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "bnn/aggregation.hpp"
#include "bnn/bnn.hpp"
#include "bnn/bns_set.hpp"
#include "bnn/mcdm.hpp"

namespace bnn::testing {

inline constexpr std::uint64_t kSeed = 0x5eedb17e;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  // A component in [0,1]; boundaries are hit on purpose now and then.
  double unit() {
    if (chance(0.05)) return 0.0;
    if (chance(0.05)) return 1.0;
    return uniform(0.0, 1.0);
  }

  Bnn bnn() {
    Bnn::Components c{};
    for (std::size_t k = 0; k < kComponentCount; ++k) c[k] = k < 3 ? unit() : -unit();
    return Bnn(c);
  }

  // Strictly interior components, for identities that only hold away from 0^0.
  Bnn interior_bnn() {
    Bnn::Components c{};
    for (std::size_t k = 0; k < kComponentCount; ++k) {
      const double v = uniform(0.001, 0.999);
      c[k] = k < 3 ? v : -v;
    }
    return Bnn(c);
  }

  std::vector<Bnn> family(std::size_t n) {
    std::vector<Bnn> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(bnn());
    return out;
  }

  // Random weights summing to one, with the occasional zero.
  WeightVector weights(std::size_t n, double zero_chance = 0.15) {
    std::vector<double> raw(n);
    for (auto& w : raw) w = chance(zero_chance) ? 0.0 : uniform(0.01, 1.0);
    if (std::all_of(raw.begin(), raw.end(), [](double w) { return w == 0.0; })) raw[0] = 1.0;
    return make_weights(raw, true);
  }

  std::vector<std::string> labels(std::size_t n, const std::string& prefix) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k + 1));
    return out;
  }

  BnsSet set(const std::vector<std::string>& universe) {
    std::vector<BnsSet::Assignment> values;
    for (const auto& label : universe) values.emplace_back(label, bnn());
    return BnsSet(universe, values);
  }

  DecisionProblem problem(std::size_t m, std::size_t n) {
    std::vector<std::vector<Bnn>> matrix(m);
    for (auto& row : matrix) row = family(n);
    return DecisionProblem(labels(m, "A"), labels(n, "C"), weights(n), std::move(matrix));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// ---- 50-digit oracle ----

using Hp = boost::multiprecision::cpp_dec_float_50;
using HpTuple = std::array<Hp, kComponentCount>;

// prod x_j^w_j evaluated as exp(sum w_j log x_j) in 50-digit arithmetic, with
// 0^0 = 1 and 0^w = 0 for w > 0.
inline Hp hp_weighted_product(const std::vector<Hp>& xs, const std::vector<Hp>& ws) {
  Hp log_sum = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (ws[j] == 0) continue;
    if (xs[j] == 0) return Hp(0);
    log_sum += ws[j] * boost::multiprecision::log(xs[j]);
  }
  return boost::multiprecision::exp(log_sum);
}

inline std::vector<Hp> hp_weights(const WeightVector& w) {
  std::vector<Hp> out;
  for (const double x : w.values()) out.emplace_back(x);
  return out;
}

// Column c of the family mapped through f, in high precision.
template <typename F>
std::vector<Hp> hp_column(const std::vector<Bnn>& items, std::size_t c, F f) {
  std::vector<Hp> out;
  for (const auto& a : items) out.push_back(f(Hp(a.components()[c])));
  return out;
}

inline HpTuple oracle_weighted_average(const std::vector<Bnn>& items, const WeightVector& w) {
  const auto ws = hp_weights(w);
  auto prod = [&](std::size_t c, auto f) { return hp_weighted_product(hp_column(items, c, f), ws); };
  const auto id = [](const Hp& x) { return x; };
  const auto one_minus = [](const Hp& x) { return Hp(1) - x; };
  const auto neg = [](const Hp& x) { return -x; };
  const auto one_plus = [](const Hp& x) { return Hp(1) + x; };
  return {Hp(1) - prod(0, one_minus), prod(1, id), prod(2, id), -prod(3, neg),
          -(Hp(1) - prod(4, one_plus)), -(Hp(1) - prod(5, one_plus))};
}

inline HpTuple oracle_weighted_geometric(const std::vector<Bnn>& items, const WeightVector& w) {
  const auto ws = hp_weights(w);
  auto prod = [&](std::size_t c, auto f) { return hp_weighted_product(hp_column(items, c, f), ws); };
  const auto id = [](const Hp& x) { return x; };
  const auto one_minus = [](const Hp& x) { return Hp(1) - x; };
  const auto neg = [](const Hp& x) { return -x; };
  const auto one_plus = [](const Hp& x) { return Hp(1) + x; };
  return {prod(0, id), Hp(1) - prod(1, one_minus), Hp(1) - prod(2, one_minus),
          -(Hp(1) - prod(3, one_plus)), -prod(4, neg), -prod(5, neg)};
}

inline double max_abs_diff(const Bnn& a, const HpTuple& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < kComponentCount; ++k) {
    const Hp d = boost::multiprecision::abs(Hp(a.components()[k]) - b[k]);
    worst = std::max(worst, d.convert_to<double>());
  }
  return worst;
}

inline double max_abs_diff(const Bnn& a, const Bnn& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < kComponentCount; ++k) {
    worst = std::max(worst, std::abs(a.components()[k] - b.components()[k]));
  }
  return worst;
}

}  // namespace bnn::testing
