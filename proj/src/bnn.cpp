#include "bnn/bnn.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "bnn/error.hpp"
#include "text.hpp"

namespace bnn {
namespace {

void validate(const Bnn::Components& c) {
  for (const Component comp : kAllComponents) {
    const double v = c[static_cast<std::size_t>(comp)];
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::NonFiniteComponent,
                  fmt::format("component {} is not finite ({})", component_name(comp), v));
    }
    const bool neg = is_negative_part(comp);
    const double lo = neg ? -1.0 : 0.0;
    const double hi = neg ? 0.0 : 1.0;
    if (v < lo || v > hi) {
      throw Error(ErrorKind::ComponentOutOfRange,
                  fmt::format("component {} = {} is outside [{}, {}]", component_name(comp),
                              v, lo, hi));
    }
  }
}

void require_positive(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::NonPositiveLambda,
                fmt::format("lambda must be a finite positive real, got {}", lambda));
  }
}

// 1 - (1-x)(1-y) for x, y in [0,1]: the probabilistic sum.
double psum(double x, double y) { return x + y - x * y; }

// 1 - (1-x)^l, exact at l = 1.
double co_pow(double x, double l) {
  if (l == 1.0) return x;
  return -std::expm1(l * std::log1p(-x));
}

}  // namespace

const char* component_name(Component c) {
  switch (c) {
    case Component::TPos: return "t_pos";
    case Component::IPos: return "i_pos";
    case Component::FPos: return "f_pos";
    case Component::TNeg: return "t_neg";
    case Component::INeg: return "i_neg";
    case Component::FNeg: return "f_neg";
  }
  return "?";
}

Bnn::Bnn(double t_pos, double i_pos, double f_pos, double t_neg, double i_neg, double f_neg)
    : Bnn(Components{t_pos, i_pos, f_pos, t_neg, i_neg, f_neg}) {}

Bnn::Bnn(const Components& c) : c_(c) { validate(c_); }

Bnn Bnn::from_computed(const Components& c) {
  Components out{};
  for (std::size_t k = 0; k < kComponentCount; ++k) {
    const bool neg = k >= 3;
    double v = c[k];
    if (!std::isnan(v)) {
      v = neg ? std::clamp(v, -1.0, 0.0) : std::clamp(v, 0.0, 1.0);
      v += 0.0;  // -0.0 -> +0.0
    }
    out[k] = v;
  }
  return Bnn(out);
}

Bnn make_bnn(double t_pos, double i_pos, double f_pos, double t_neg, double i_neg,
             double f_neg) {
  return Bnn(t_pos, i_pos, f_pos, t_neg, i_neg, f_neg);
}

double component_sum(const Bnn& a) {
  return a.t_pos() + a.i_pos() + a.f_pos() - a.t_neg() - a.i_neg() - a.f_neg();
}

Bnn scale(double lambda, const Bnn& a) {
  require_positive(lambda);
  return Bnn::from_computed({
      co_pow(a.t_pos(), lambda),
      std::pow(a.i_pos(), lambda),
      std::pow(a.f_pos(), lambda),
      -std::pow(-a.t_neg(), lambda),
      -co_pow(-a.i_neg(), lambda),
      -co_pow(-a.f_neg(), lambda),
  });
}

Bnn power(const Bnn& a, double lambda) {
  require_positive(lambda);
  return Bnn::from_computed({
      std::pow(a.t_pos(), lambda),
      co_pow(a.i_pos(), lambda),
      co_pow(a.f_pos(), lambda),
      -co_pow(-a.t_neg(), lambda),
      -std::pow(-a.i_neg(), lambda),
      -std::pow(-a.f_neg(), lambda),
  });
}

Bnn add(const Bnn& a, const Bnn& b) {
  return Bnn::from_computed({
      psum(a.t_pos(), b.t_pos()),
      a.i_pos() * b.i_pos(),
      a.f_pos() * b.f_pos(),
      -(a.t_neg() * b.t_neg()),
      -psum(-a.i_neg(), -b.i_neg()),
      -psum(-a.f_neg(), -b.f_neg()),
  });
}

Bnn multiply(const Bnn& a, const Bnn& b) {
  return Bnn::from_computed({
      a.t_pos() * b.t_pos(),
      psum(a.i_pos(), b.i_pos()),
      psum(a.f_pos(), b.f_pos()),
      -psum(-a.t_neg(), -b.t_neg()),
      -(a.i_neg() * b.i_neg()),
      -(a.f_neg() * b.f_neg()),
  });
}

Bnn additive_identity() { return Bnn(0.0, 1.0, 1.0, -1.0, 0.0, 0.0); }

Bnn multiplicative_identity() { return Bnn(1.0, 0.0, 0.0, 0.0, -1.0, -1.0); }

double score(const Bnn& a) {
  const double s = (a.t_pos() + 1.0 - a.i_pos() + 1.0 - a.f_pos() + 1.0 + a.t_neg() -
                    a.i_neg() - a.f_neg()) /
                   6.0;
  return std::clamp(s, 0.0, 1.0);
}

double accuracy(const Bnn& a) { return a.t_pos() - a.f_pos() + a.t_neg() - a.f_neg(); }

double certainty(const Bnn& a) { return a.t_pos() - a.f_neg(); }

const char* to_string(RankOrdering o) {
  switch (o) {
    case RankOrdering::Less: return "Less";
    case RankOrdering::Equal: return "Equal";
    case RankOrdering::Greater: return "Greater";
  }
  return "?";
}

RankOrdering compare(const Bnn& a, const Bnn& b, double tie_tolerance) {
  const double tiers_a[] = {score(a), accuracy(a), certainty(a)};
  const double tiers_b[] = {score(b), accuracy(b), certainty(b)};
  for (int k = 0; k < 3; ++k) {
    const double d = tiers_a[k] - tiers_b[k];
    if (std::abs(d) > tie_tolerance) return d > 0 ? RankOrdering::Greater : RankOrdering::Less;
  }
  return RankOrdering::Equal;
}

Bnn element_complement(const Bnn& a) {
  if (a.has_preimage_) return Bnn(a.preimage_);
  Bnn out = Bnn::from_computed({
      1.0 - a.t_pos(),
      1.0 - a.i_pos(),
      1.0 - a.f_pos(),
      -1.0 - a.t_neg(),
      -1.0 - a.i_neg(),
      -1.0 - a.f_neg(),
  });
  out.has_preimage_ = true;
  out.preimage_ = a.c_;
  return out;
}

std::string to_string(const Bnn& a, int precision) {
  precision = std::clamp(precision, 0, 17);
  const auto& c = a.components();
  // Rounding can turn a tiny negative into "-0.000"; print it as zero.
  auto fmt1 = [precision](double v) {
    std::string s = fmt::format("{:.{}f}", v, precision);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
  };
  return fmt::format("⟨{}, {}, {}, {}, {}, {}⟩", fmt1(c[0]), fmt1(c[1]), fmt1(c[2]),
                     fmt1(c[3]), fmt1(c[4]), fmt1(c[5]));
}

Bnn parse_bnn(std::string_view text) {
  auto body = detail::trim(text);
  for (const auto& [open, close] : {std::pair<std::string_view, std::string_view>{"⟨", "⟩"},
                                    {"<", ">"}, {"[", "]"}, {"(", ")"}}) {
    if (body.starts_with(open) && body.ends_with(close) &&
        body.size() >= open.size() + close.size()) {
      body = body.substr(open.size(), body.size() - open.size() - close.size());
      break;
    }
  }
  const auto parts = detail::split(body, ',');
  if (parts.size() != kComponentCount) {
    throw Error(ErrorKind::WrongTupleArity,
                fmt::format("expected 6 comma-separated components, got {}", parts.size()));
  }
  Bnn::Components c{};
  for (std::size_t k = 0; k < kComponentCount; ++k) {
    const auto v = detail::parse_double(parts[k]);
    if (!v) {
      throw Error(ErrorKind::MalformedDocument,
                  fmt::format("component {} ('{}') is not a number",
                              component_name(kAllComponents[k]), detail::trim(parts[k])));
    }
    c[k] = *v;
  }
  return Bnn(c);
}

}  // namespace bnn
