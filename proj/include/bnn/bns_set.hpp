#pragma once

// Bipolar neutrosophic sets over a finite, ordered universe of labels.

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bnn/bnn.hpp"

namespace bnn {

inline constexpr double kSetEqualityTolerance = 1e-12;

class BnsSet {
 public:
  using Assignment = std::pair<std::string, Bnn>;

  // Empty set over the empty universe.
  BnsSet() = default;

  // Throws DuplicateLabel, MissingAssignment (a universe label with no value),
  // UnknownLabel (a value for a label outside the universe) or DuplicateLabel
  // for an element assigned twice.
  BnsSet(std::vector<std::string> universe, std::span<const Assignment> assignments);
  BnsSet(std::vector<std::string> universe, const std::map<std::string, Bnn>& membership);

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_.size(); }
  bool contains(const std::string& label) const { return index_.contains(label); }

  // Throws UnknownLabel.
  const Bnn& at(const std::string& label) const;

  // Values in universe order.
  const std::vector<Bnn>& values() const noexcept { return values_; }

  // Exact equality of universes (in order) and values.
  friend bool operator==(const BnsSet& a, const BnsSet& b) {
    return a.universe_ == b.universe_ && a.values_ == b.values_;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<Bnn> values_;
  std::map<std::string, std::size_t> index_;
};

BnsSet make_set(std::vector<std::string> universe,
                std::span<const BnsSet::Assignment> assignments);

// Binary set operations. The universes must contain the same labels (order may
// differ); the result uses the universe order of `a`. Throws UniverseMismatch.
//
// union: (max T+, avg I+, min F+, min T-, avg I-, max F-) per element.
BnsSet set_union(const BnsSet& a, const BnsSet& b);
// intersection: (min T+, avg I+, max F+, max T-, avg I-, min F-) per element.
BnsSet set_intersection(const BnsSet& a, const BnsSet& b);

// Left folds ((s0 op s1) op s2) ... Because the indeterminacy components are
// averaged, neither operation is associative: the result depends on grouping
// and order. Throws EmptyFamily for an empty list.
BnsSet fold_union(std::span<const BnsSet> sets);
BnsSet fold_intersection(std::span<const BnsSet> sets);

BnsSet complement(const BnsSet& a);

// Holds iff at every element T1+ <= T2+, I1+ <= I2+, F1+ >= F2+, T1- >= T2-,
// I1- >= I2-, F1- <= F2-.
bool is_subset(const BnsSet& a, const BnsSet& b);

// Componentwise equality within kSetEqualityTolerance at every element.
bool set_equals(const BnsSet& a, const BnsSet& b);

// ---- simpler set models ----

struct BipolarFuzzyValue {
  double mu_pos = 0.0;  // [0, 1]
  double mu_neg = 0.0;  // [-1, 0]
};

class BipolarFuzzySet {
 public:
  BipolarFuzzySet(std::vector<std::string> universe, std::vector<BipolarFuzzyValue> values);
  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::vector<BipolarFuzzyValue>& values() const noexcept { return values_; }

 private:
  std::vector<std::string> universe_;
  std::vector<BipolarFuzzyValue> values_;
};

struct SvnValue {
  double t = 0.0;
  double i = 0.0;
  double f = 0.0;
};

// Single-valued neutrosophic set: one (t, i, f) triple in [0,1]^3 per label.
class SvnSet {
 public:
  SvnSet(std::vector<std::string> universe, std::vector<SvnValue> values);
  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::vector<SvnValue>& values() const noexcept { return values_; }

 private:
  std::vector<std::string> universe_;
  std::vector<SvnValue> values_;
};

// <mu+, 0, 0, mu-, 0, 0> per element.
BnsSet embed_bipolar_fuzzy(const BipolarFuzzySet& s);
// <t, i, f, 0, 0, 0> per element.
BnsSet embed_svn(const SvnSet& s);

Bnn embed_svn_value(const SvnValue& v);

}  // namespace bnn
