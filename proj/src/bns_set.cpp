#include "bnn/bns_set.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "bnn/error.hpp"

namespace bnn {
namespace {

std::map<std::string, std::size_t> index_labels(const std::vector<std::string>& universe) {
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < universe.size(); ++k) {
    if (!index.emplace(universe[k], k).second) {
      throw Error(ErrorKind::DuplicateLabel,
                  fmt::format("label '{}' appears more than once in the universe", universe[k]));
    }
  }
  return index;
}

void require_same_universe(const BnsSet& a, const BnsSet& b) {
  bool same = a.size() == b.size();
  for (std::size_t k = 0; same && k < a.size(); ++k) same = b.contains(a.universe()[k]);
  if (!same) {
    throw Error(ErrorKind::UniverseMismatch, "the two sets are defined over different universes");
  }
}

template <typename Op>
BnsSet pointwise(const BnsSet& a, const BnsSet& b, Op op) {
  require_same_universe(a, b);
  std::map<std::string, Bnn> out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& label = a.universe()[k];
    out.emplace(label, op(a.values()[k], b.at(label)));
  }
  return BnsSet(a.universe(), out);
}

double mid(double x, double y) { return (x + y) / 2.0; }

template <typename BinaryOp>
BnsSet fold(std::span<const BnsSet> sets, BinaryOp op) {
  if (sets.empty()) throw Error(ErrorKind::EmptyFamily, "cannot fold an empty list of sets");
  BnsSet acc = sets.front();
  for (const auto& s : sets.subspan(1)) acc = op(acc, s);
  return acc;
}

void check_range(const std::string& label, const char* what, double v, double lo, double hi) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::NonFiniteComponent,
                fmt::format("element '{}': {} is not finite", label, what));
  }
  if (v < lo || v > hi) {
    throw Error(ErrorKind::ComponentOutOfRange,
                fmt::format("element '{}': {} = {} is outside [{}, {}]", label, what, v, lo, hi));
  }
}

void check_lengths(const std::vector<std::string>& universe, std::size_t values) {
  if (universe.size() != values) {
    throw Error(ErrorKind::MissingAssignment,
                fmt::format("{} labels but {} membership values", universe.size(), values));
  }
  index_labels(universe);
}

}  // namespace

BnsSet::BnsSet(std::vector<std::string> universe, std::span<const Assignment> assignments)
    : universe_(std::move(universe)), index_(index_labels(universe_)) {
  std::vector<const Bnn*> slots(universe_.size(), nullptr);
  for (const auto& [label, value] : assignments) {
    const auto it = index_.find(label);
    if (it == index_.end()) {
      throw Error(ErrorKind::UnknownLabel,
                  fmt::format("label '{}' is not part of the universe", label));
    }
    if (slots[it->second] != nullptr) {
      throw Error(ErrorKind::DuplicateLabel,
                  fmt::format("label '{}' is assigned more than once", label));
    }
    slots[it->second] = &value;
  }
  values_.reserve(universe_.size());
  for (std::size_t k = 0; k < universe_.size(); ++k) {
    if (slots[k] == nullptr) {
      throw Error(ErrorKind::MissingAssignment,
                  fmt::format("label '{}' has no membership value", universe_[k]));
    }
    values_.push_back(*slots[k]);
  }
}

BnsSet::BnsSet(std::vector<std::string> universe, const std::map<std::string, Bnn>& membership)
    : BnsSet(std::move(universe),
             std::vector<Assignment>(membership.begin(), membership.end())) {}

const Bnn& BnsSet::at(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) {
    throw Error(ErrorKind::UnknownLabel,
                fmt::format("label '{}' is not part of the universe", label));
  }
  return values_[it->second];
}

BnsSet make_set(std::vector<std::string> universe,
                std::span<const BnsSet::Assignment> assignments) {
  return BnsSet(std::move(universe), assignments);
}

BnsSet set_union(const BnsSet& a, const BnsSet& b) {
  return pointwise(a, b, [](const Bnn& x, const Bnn& y) {
    return Bnn::from_computed({
        std::max(x.t_pos(), y.t_pos()),
        mid(x.i_pos(), y.i_pos()),
        std::min(x.f_pos(), y.f_pos()),
        std::min(x.t_neg(), y.t_neg()),
        mid(x.i_neg(), y.i_neg()),
        std::max(x.f_neg(), y.f_neg()),
    });
  });
}

BnsSet set_intersection(const BnsSet& a, const BnsSet& b) {
  return pointwise(a, b, [](const Bnn& x, const Bnn& y) {
    return Bnn::from_computed({
        std::min(x.t_pos(), y.t_pos()),
        mid(x.i_pos(), y.i_pos()),
        std::max(x.f_pos(), y.f_pos()),
        std::max(x.t_neg(), y.t_neg()),
        mid(x.i_neg(), y.i_neg()),
        std::min(x.f_neg(), y.f_neg()),
    });
  });
}

BnsSet fold_union(std::span<const BnsSet> sets) { return fold(sets, set_union); }

BnsSet fold_intersection(std::span<const BnsSet> sets) { return fold(sets, set_intersection); }

BnsSet complement(const BnsSet& a) {
  std::vector<BnsSet::Assignment> out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out.emplace_back(a.universe()[k], element_complement(a.values()[k]));
  }
  return BnsSet(a.universe(), out);
}

bool is_subset(const BnsSet& a, const BnsSet& b) {
  require_same_universe(a, b);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Bnn& x = a.values()[k];
    const Bnn& y = b.at(a.universe()[k]);
    const bool holds = x.t_pos() <= y.t_pos() && x.i_pos() <= y.i_pos() &&
                       x.f_pos() >= y.f_pos() && x.t_neg() >= y.t_neg() &&
                       x.i_neg() >= y.i_neg() && x.f_neg() <= y.f_neg();
    if (!holds) return false;
  }
  return true;
}

bool set_equals(const BnsSet& a, const BnsSet& b) {
  require_same_universe(a, b);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& x = a.values()[k].components();
    const auto& y = b.at(a.universe()[k]).components();
    for (std::size_t c = 0; c < kComponentCount; ++c) {
      if (std::abs(x[c] - y[c]) > kSetEqualityTolerance) return false;
    }
  }
  return true;
}

BipolarFuzzySet::BipolarFuzzySet(std::vector<std::string> universe,
                                 std::vector<BipolarFuzzyValue> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  check_lengths(universe_, values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k) {
    check_range(universe_[k], "mu_pos", values_[k].mu_pos, 0.0, 1.0);
    check_range(universe_[k], "mu_neg", values_[k].mu_neg, -1.0, 0.0);
  }
}

SvnSet::SvnSet(std::vector<std::string> universe, std::vector<SvnValue> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  check_lengths(universe_, values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k) {
    check_range(universe_[k], "t", values_[k].t, 0.0, 1.0);
    check_range(universe_[k], "i", values_[k].i, 0.0, 1.0);
    check_range(universe_[k], "f", values_[k].f, 0.0, 1.0);
  }
}

BnsSet embed_bipolar_fuzzy(const BipolarFuzzySet& s) {
  std::vector<BnsSet::Assignment> out;
  for (std::size_t k = 0; k < s.universe().size(); ++k) {
    const auto& v = s.values()[k];
    out.emplace_back(s.universe()[k], Bnn(v.mu_pos, 0.0, 0.0, v.mu_neg, 0.0, 0.0));
  }
  return BnsSet(s.universe(), out);
}

Bnn embed_svn_value(const SvnValue& v) { return Bnn(v.t, v.i, v.f, 0.0, 0.0, 0.0); }

BnsSet embed_svn(const SvnSet& s) {
  std::vector<BnsSet::Assignment> out;
  for (std::size_t k = 0; k < s.universe().size(); ++k) {
    out.emplace_back(s.universe()[k], embed_svn_value(s.values()[k]));
  }
  return BnsSet(s.universe(), out);
}

}  // namespace bnn
