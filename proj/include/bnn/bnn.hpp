#pragma once

// Bipolar neutrosophic numbers.
//
// A Bnn is the 6-tuple <T+, I+, F+, T-, I-, F-> where the positive triple lies
// in [0,1] and measures truth, indeterminacy and falsity with respect to a
// property, and the negative triple lies in [-1,0] and measures the same three
// degrees with respect to the implicit counter-property.
//
// Values are immutable. Every operation below is a pure function.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace bnn {

enum class Component : std::size_t { TPos = 0, IPos, FPos, TNeg, INeg, FNeg };

inline constexpr std::size_t kComponentCount = 6;
inline constexpr std::array<Component, kComponentCount> kAllComponents{
    Component::TPos, Component::IPos, Component::FPos,
    Component::TNeg, Component::INeg, Component::FNeg};

const char* component_name(Component c);

constexpr bool is_negative_part(Component c) {
  return static_cast<std::size_t>(c) >= 3;
}

class Bnn {
 public:
  using Components = std::array<double, kComponentCount>;

  // Validating constructor. Throws Error(NonFiniteComponent) or
  // Error(ComponentOutOfRange) naming the offending component.
  Bnn(double t_pos, double i_pos, double f_pos, double t_neg, double i_neg, double f_neg);
  explicit Bnn(const Components& c);

  // The all-zero tuple.
  Bnn() = default;

  double t_pos() const noexcept { return c_[0]; }
  double i_pos() const noexcept { return c_[1]; }
  double f_pos() const noexcept { return c_[2]; }
  double t_neg() const noexcept { return c_[3]; }
  double i_neg() const noexcept { return c_[4]; }
  double f_neg() const noexcept { return c_[5]; }

  double operator[](Component c) const noexcept { return c_[static_cast<std::size_t>(c)]; }
  const Components& components() const noexcept { return c_; }

  // Exact componentwise equality.
  friend bool operator==(const Bnn& a, const Bnn& b) noexcept { return a.c_ == b.c_; }

  // Builds a value from components produced by closed-form operations. Round-off
  // outside the legal ranges is clamped away and -0.0 is normalised to +0.0.
  // NaN input is still rejected.
  static Bnn from_computed(const Components& c);

 private:
  friend Bnn element_complement(const Bnn& a);

  Components c_{};
  // Set on values produced by element_complement(): the exact pre-image, so that
  // complementing twice returns the original bits rather than 1-(1-x).
  bool has_preimage_ = false;
  Components preimage_{};
};

// Factory spelling of the validating constructor.
Bnn make_bnn(double t_pos, double i_pos, double f_pos, double t_neg, double i_neg,
             double f_neg);

// T+ + I+ + F+ - T- - I- - F-, always within [0, 6] for a valid value.
double component_sum(const Bnn& a);

// ---- arithmetic (lambda > 0, otherwise Error(NonPositiveLambda)) ----

// lambda * a. Positive part <1-(1-T)^l, I^l, F^l>; negative part
// <-(-T)^l, -(1-(1+I)^l), -(1-(1+F)^l)>, consistent with add().
Bnn scale(double lambda, const Bnn& a);

// a^lambda. Positive part <T^l, 1-(1-I)^l, 1-(1-F)^l>; negative part
// <-(1-(1+T)^l), -(-I)^l, -(-F)^l>, consistent with multiply().
Bnn power(const Bnn& a, double lambda);

Bnn add(const Bnn& a, const Bnn& b);
Bnn multiply(const Bnn& a, const Bnn& b);

// Neutral elements: add(a, additive_identity()) == a and
// multiply(a, multiplicative_identity()) == a.
Bnn additive_identity();
Bnn multiplicative_identity();

// ---- ranking functions ----

// (T+ + 1 - I+ + 1 - F+ + 1 + T- - I- - F-) / 6, in [0, 1].
double score(const Bnn& a);
// T+ - F+ + T- - F-, in [-2, 2].
double accuracy(const Bnn& a);
// T+ - F-, in [0, 2].
double certainty(const Bnn& a);

enum class RankOrdering { Less, Equal, Greater };

const char* to_string(RankOrdering o);

inline constexpr double kDefaultTieTolerance = 1e-9;

// Lexicographic comparison on (score, accuracy, certainty). Two tier values
// closer than `tie_tolerance` are treated as tied.
RankOrdering compare(const Bnn& a, const Bnn& b,
                     double tie_tolerance = kDefaultTieTolerance);

// <1-T+, 1-I+, 1-F+, -1-T-, -1-I-, -1-F->. An involution.
Bnn element_complement(const Bnn& a);

// "⟨t+, i+, f+, t-, i-, f-⟩" with `precision` digits after the decimal point.
std::string to_string(const Bnn& a, int precision = 3);

// Parses "t+,i+,f+,t-,i-,f-" (whitespace around entries allowed, optional
// surrounding angle brackets). Throws MalformedDocument, WrongTupleArity or
// validation errors.
Bnn parse_bnn(std::string_view text);

}  // namespace bnn
