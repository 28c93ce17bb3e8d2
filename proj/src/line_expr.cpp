#include "entropy_adjoint/line_expr.hpp"

#include <limits>

#include "entropy_adjoint/errors.hpp"

namespace entropy_adjoint {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t product = 0;
  if (__builtin_mul_overflow(a, b, &product) || product > std::numeric_limits<std::int32_t>::max()) throw InputError("map constants need too fine a probe grid");
  return product;
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t breakpoint_factor(const LineExpr& expr) {
  return std::visit(
      overloaded{
          [](const LineExpr::Affine& a) {
            const std::int64_t slope_num = a.slope.numerator() == 0 ? 1 : abs64(a.slope.numerator());
            return checked_mul(checked_mul(a.slope.denominator(), a.offset.denominator()), slope_num);
          },
          [](const LineExpr::FloorDiv& f) { return f.divisor.denominator(); },
          [](const LineExpr::CeilDiv& c) { return c.divisor.denominator(); },
          [](const LineExpr::Constant& c) { return c.value.denominator(); },
          [](const LineExpr::Compose& c) {
            return checked_mul(breakpoint_factor(c.outer), breakpoint_factor(c.inner));
          },
      },
      expr.node());
}

std::string wrap(const std::string& variable) {
  for (char c : variable) {
    if (c == ' ' || c == '+') return "(" + variable + ")";
  }
  return variable;
}

}  // namespace

LineExpr LineExpr::affine(const Rational& slope, const Rational& offset) {
  if (slope < 0) throw InputError("affine slope must be nonnegative, got " + to_string(slope));
  return LineExpr(std::make_shared<const Node>(Affine{slope, offset}));
}

LineExpr LineExpr::floor_div(const Rational& divisor) {
  if (divisor <= 0) throw InputError("floor_div divisor must be positive");
  return LineExpr(std::make_shared<const Node>(FloorDiv{divisor}));
}

LineExpr LineExpr::ceil_div(const Rational& divisor) {
  if (divisor <= 0) throw InputError("ceil_div divisor must be positive");
  return LineExpr(std::make_shared<const Node>(CeilDiv{divisor}));
}

LineExpr LineExpr::constant(const Rational& value) {
  return LineExpr(std::make_shared<const Node>(Constant{value}));
}

LineExpr LineExpr::compose(const LineExpr& outer, const LineExpr& inner) {
  return LineExpr(std::make_shared<const Node>(Compose{outer, inner}));
}

Rational LineExpr::operator()(const Rational& x) const {
  return std::visit(overloaded{
                        [&](const Affine& a) { return a.slope * x + a.offset; },
                        [&](const FloorDiv& f) { return floor(x / f.divisor); },
                        [&](const CeilDiv& c) { return ceil(x / c.divisor); },
                        [&](const Constant& c) { return c.value; },
                        [&](const Compose& c) { return c.outer(c.inner(x)); },
                    },
                    *node_);
}

std::int64_t LineExpr::resolution_hint() const { return checked_mul(2, breakpoint_factor(*this)); }

std::string LineExpr::describe(const std::string& variable) const {
  return std::visit(
      overloaded{
          [&](const Affine& a) -> std::string {
            std::string term;
            if (a.slope == 0) return to_display(a.offset);
            term = a.slope == 1 ? variable : to_display(a.slope) + "*" + wrap(variable);
            if (a.offset > 0) term += " + " + to_display(a.offset);
            if (a.offset < 0) term += " - " + to_display(-a.offset);
            return term;
          },
          [&](const FloorDiv& f) { return "floor(" + variable + "/" + to_display(f.divisor) + ")"; },
          [&](const CeilDiv& c) { return "ceil(" + variable + "/" + to_display(c.divisor) + ")"; },
          [&](const Constant& c) { return to_display(c.value); },
          [&](const Compose& c) { return c.outer.describe(c.inner.describe(variable)); },
      },
      *node_);
}

bool operator==(const LineExpr& a, const LineExpr& b) { return a.node_ == b.node_ || *a.node_ == *b.node_; }

}  // namespace entropy_adjoint
