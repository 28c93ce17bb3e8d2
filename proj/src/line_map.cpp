#include "entropy_adjoint/line_map.hpp"

#include <functional>
#include <limits>

#include <fmt/format.h>

#include "entropy_adjoint/errors.hpp"

namespace entropy_adjoint {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::int64_t kSearchLimit = std::int64_t{1} << 36;

using Predicate = std::function<bool(std::int64_t)>;

// Largest k in [0, limit] with pred(k), pred being true on a prefix.
// Empty if pred(0) fails or pred never fails below the limit.
std::optional<std::int64_t> last_true(const Predicate& pred) {
  if (!pred(0)) return std::nullopt;
  std::int64_t lo = 0, hi = 1;
  while (pred(hi)) {
    lo = hi;
    if (hi == kSearchLimit) return std::nullopt;
    hi = std::min(hi * 2, kSearchLimit);
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (pred(mid) ? lo : hi) = mid;
  }
  return lo;
}

// Smallest k with pred(k), pred being true on a suffix.
std::optional<std::int64_t> first_true(const Predicate& pred) {
  if (pred(0)) return 0;
  std::int64_t lo = 0, hi = 1;
  while (!pred(hi)) {
    lo = hi;
    if (hi == kSearchLimit) return std::nullopt;
    hi = std::min(hi * 2, kSearchLimit);
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t r = lcm(a, b);
  if (r > std::numeric_limits<std::int32_t>::max()) throw InputError("maps need too fine a search lattice");
  return r;
}

bool equiv(const LineSystem& s, const Rational& x, const Rational& y) { return s.leq(x, y) && s.leq(y, x); }

}  // namespace

LineMap::LineMap(const LineSystem& source, const LineSystem& target, const LineExpr& expr,
                 std::optional<Rational> scaling_exponent)
    : source_(source.refined(expr.resolution_hint())),
      target_(target.refined(expr.resolution_hint())),
      repr_(std::make_shared<const Repr>(expr)),
      exponent_(std::move(scaling_exponent)) {
  for (const Rational& x : source_.probes()) {
    const Rational y = expr(x);
    if (!target_.contains(y)) {
      throw InputError(fmt::format("{} sends {} to {}, outside {}", expr.describe(), to_display(x), to_display(y),
                                   target_.describe()));
    }
  }
}

LineMap::LineMap(const LineSystem& source, const LineSystem& target, std::shared_ptr<const Repr> repr,
                 std::optional<Rational> scaling_exponent)
    : source_(source), target_(target), repr_(std::move(repr)), exponent_(std::move(scaling_exponent)) {}

LineMap LineMap::adjoint_of(const LineMap& base, AdjointSide side) {
  std::optional<Rational> exponent;
  if (base.exponent_ && *base.exponent_ != 0) exponent = Rational(1) / *base.exponent_;
  return LineMap(base.target_, base.source_, std::make_shared<const Repr>(Residual{base, side}), exponent);
}

std::optional<Rational> LineMap::try_apply(const Rational& x) const {
  if (!source_.contains(x)) return std::nullopt;
  const auto value = std::visit(
      overloaded{
          [&](const LineExpr& e) -> std::optional<Rational> { return e(x); },
          [&](const Chain& c) -> std::optional<Rational> {
            const auto mid = c.inner.try_apply(x);
            return mid ? c.outer.try_apply(*mid) : std::nullopt;
          },
          [&](const Residual& r) -> std::optional<Rational> {
            // This map runs from r.base's target back to r.base's source.
            const LineSystem& back = r.base.source();
            const LineSystem& fwd = r.base.target();
            auto at = [&](std::int64_t q) -> std::optional<Rational> {
              std::optional<std::int64_t> k;
              if (r.side == AdjointSide::right_of) {
                k = last_true([&](std::int64_t i) {
                  const auto v = r.base.try_apply(Rational(i, q));
                  return v && fwd.leq(*v, x);
                });
              } else {
                k = first_true([&](std::int64_t i) {
                  const auto v = r.base.try_apply(Rational(i, q));
                  return v && fwd.leq(x, *v);
                });
              }
              if (!k) return std::nullopt;
              return Rational(*k, q);
            };
            const std::int64_t q = back.line().resolution();
            const auto coarse = at(q);
            if (!coarse) return std::nullopt;
            if (back.line().kind() == LineKind::reals) {
              const auto fine = at(2 * q);
              if (!fine || !equiv(back, *coarse, *fine)) return std::nullopt;
            }
            return back.canonical(*coarse);
          },
      },
      static_cast<const std::variant<LineExpr, Residual, Chain>&>(*repr_));
  if (!value || !target_.contains(*value)) return std::nullopt;
  return value;
}

Rational LineMap::operator()(const Rational& x) const {
  if (!source_.contains(x)) {
    throw InputError(fmt::format("{} is not in the source carrier {}", to_display(x), source_.describe()));
  }
  const auto value = try_apply(x);
  if (!value) throw InputError(fmt::format("{} is undefined at {}", describe(), to_display(x)));
  return *value;
}

std::optional<LineExpr> LineMap::expression() const {
  if (const auto* e = std::get_if<LineExpr>(repr_.get())) return *e;
  return std::nullopt;
}

const LineMap::Residual* LineMap::residual() const { return std::get_if<Residual>(repr_.get()); }
const LineMap::Chain* LineMap::chain() const { return std::get_if<Chain>(repr_.get()); }

LineMap LineMap::with_scaling_exponent(std::optional<Rational> exponent) const {
  LineMap out = *this;
  out.exponent_ = std::move(exponent);
  return out;
}

std::string LineMap::describe() const {
  return std::visit(overloaded{
                        [](const LineExpr& e) { return e.describe("x"); },
                        [](const Residual& r) {
                          return std::string(r.side == AdjointSide::right_of ? "right_adjoint(" : "left_adjoint(") +
                                 r.base.describe() + ")";
                        },
                        [](const Chain& c) { return c.outer.describe() + " o " + c.inner.describe(); },
                    },
                    static_cast<const std::variant<LineExpr, Residual, Chain>&>(*repr_));
}

std::int64_t LineMap::resolution_hint() const {
  return std::visit(overloaded{
                        [](const LineExpr& e) { return e.resolution_hint(); },
                        [](const Residual& r) { return r.base.resolution_hint(); },
                        [](const Chain& c) {
                          return checked_lcm(c.outer.resolution_hint(), c.inner.resolution_hint());
                        },
                    },
                    static_cast<const std::variant<LineExpr, Residual, Chain>&>(*repr_));
}

LineMap LineMap::rebound(const LineSystem& source, const LineSystem& target) const {
  if (!source.same_carrier(source_) || !target.same_carrier(target_)) {
    throw InputError("cannot rebind " + describe() + " to a different carrier");
  }
  return std::visit(
      overloaded{
          [&](const LineExpr& e) { return LineMap(source, target, e, exponent_); },
          [&](const Residual& r) {
            LineMap base = r.base.rebound(target, source);
            const LineSystem src = base.target_, dst = base.source_;
            return LineMap(src, dst, std::make_shared<const Repr>(Residual{std::move(base), r.side}), exponent_);
          },
          [&](const Chain& c) {
            const LineSystem mid = c.inner.target_.refined(c.outer.source_.line().resolution());
            LineMap inner = c.inner.rebound(source, mid);
            LineMap outer = c.outer.rebound(inner.target_, target);
            if (!(outer.source_ == inner.target_)) inner = inner.rebound(inner.source_, outer.source_);
            const LineSystem src = inner.source_, dst = outer.target_;
            return LineMap(src, dst, std::make_shared<const Repr>(Chain{std::move(outer), std::move(inner)}),
                           exponent_);
          },
      },
      static_cast<const std::variant<LineExpr, Residual, Chain>&>(*repr_));
}

LineMap compose(const LineMap& outer, const LineMap& inner) {
  if (!outer.source().same_carrier(inner.target())) {
    throw InputError("cannot compose " + outer.describe() + " after " + inner.describe() + ": middle carriers differ");
  }
  std::optional<Rational> exponent;
  if (outer.scaling_exponent() && inner.scaling_exponent()) {
    exponent = *outer.scaling_exponent() * *inner.scaling_exponent();
  }
  const auto oe = outer.expression();
  const auto ie = inner.expression();
  if (oe && ie) return LineMap(inner.source(), outer.target(), LineExpr::compose(*oe, *ie), exponent);
  LineMap::Chain chain{outer, inner};
  return LineMap(inner.source(), outer.target(), std::make_shared<const LineMap::Repr>(std::move(chain)), exponent)
      .rebound(inner.source(), outer.target());
}

std::optional<Rational> find_preimage(const LineMap& map, const Rational& y) {
  const LineSystem& src = map.source();
  const LineSystem& dst = map.target();
  std::int64_t q = 1;
  if (src.line().kind() == LineKind::reals) {
    q = checked_lcm(src.line().resolution(), dst.line().resolution());
    q = checked_lcm(q, q * map.resolution_hint());
  }
  const auto k = first_true([&](std::int64_t i) {
    const auto v = map.try_apply(Rational(i, q));
    return v && dst.leq(y, *v);
  });
  if (!k) return std::nullopt;
  const Rational x(*k, q);
  const auto v = map.try_apply(x);
  if (v && equiv(dst, *v, y)) return x;
  return std::nullopt;
}

LineMap identity_map(const LineSystem& system) { return LineMap(system, system, LineExpr::identity(), Rational(1)); }

std::optional<LineExpr> recognize_closed_form(const LineMap& map) {
  const auto probes = map.source().probes();
  std::vector<Rational> values;
  values.reserve(probes.size());
  for (const Rational& x : probes) {
    const auto v = map.try_apply(x);
    if (!v) return std::nullopt;
    values.push_back(*v);
  }
  const LineSystem& dst = map.target();
  auto fits = [&](const LineExpr& e) {
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const Rational v = e(probes[i]);
      if (!dst.contains(v) || !equiv(dst, v, values[i])) return false;
    }
    return true;
  };

  std::vector<LineExpr> candidates;
  if (probes.size() >= 2) {
    const Rational slope = (values[1] - values[0]) / (probes[1] - probes[0]);
    if (slope >= 0) candidates.push_back(LineExpr::affine(slope, values[0]));
  } else {
    candidates.push_back(LineExpr::constant(values[0]));
  }
  // floor(x/k) first reaches 1 at x = k; ceil(x/k) leaves 1 just after x = k.
  for (std::size_t i = 1; i < probes.size(); ++i) {
    if (values[i] >= 1) {
      candidates.push_back(LineExpr::floor_div(probes[i]));
      break;
    }
  }
  for (std::size_t i = 1; i < probes.size(); ++i) {
    if (values[i] > 1) {
      if (probes[i - 1] > 0) candidates.push_back(LineExpr::ceil_div(probes[i - 1]));
      break;
    }
  }
  for (const auto& e : candidates) {
    if (fits(e)) return e;
  }
  return std::nullopt;
}

}  // namespace entropy_adjoint
