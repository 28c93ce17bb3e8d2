#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "entropy_adjoint/entropy_system.hpp"
#include "entropy_adjoint/line_expr.hpp"
#include "entropy_adjoint/rational.hpp"

namespace entropy_adjoint {

enum class AdjointSide { right_of, left_of };

// Monotone map between numeric lines. Normally a closed-family expression;
// synthesized adjoints that match no closed form are kept as residuals of
// their base map and evaluated by lattice search.
class LineMap {
 public:
  using source_type = LineSystem;
  using target_type = LineSystem;
  struct Residual;
  struct Chain;
  struct Repr;

  // Refines both carriers to the expression's resolution and checks that
  // every source probe lands in the target carrier.
  LineMap(const LineSystem& source, const LineSystem& target, const LineExpr& expr,
          std::optional<Rational> scaling_exponent = std::nullopt);

  // right_of: G(d) = max{c : F(c) <= d}; left_of: F(c) = min{d : c <= G(d)}.
  // The map is partial until validated; evaluation throws where the extremum
  // does not exist.
  static LineMap adjoint_of(const LineMap& base, AdjointSide side);

  Rational operator()(const Rational& x) const;

  const LineSystem& source() const { return source_; }
  const LineSystem& target() const { return target_; }
  std::optional<LineExpr> expression() const;
  const Residual* residual() const;
  const Chain* chain() const;
  std::optional<Rational> scaling_exponent() const { return exponent_; }
  LineMap with_scaling_exponent(std::optional<Rational> exponent) const;

  std::string describe() const;
  std::int64_t resolution_hint() const;

  LineMap rebound(const LineSystem& source, const LineSystem& target) const;

  // Like operator() but empty where a residual has no extremum or x lies
  // outside the source carrier.
  std::optional<Rational> try_apply(const Rational& x) const;

  friend LineMap compose(const LineMap& outer, const LineMap& inner);

 private:
  LineMap(const LineSystem& source, const LineSystem& target, std::shared_ptr<const Repr> repr,
          std::optional<Rational> scaling_exponent);

  LineSystem source_;
  LineSystem target_;
  std::shared_ptr<const Repr> repr_;
  std::optional<Rational> exponent_;
};

struct LineMap::Residual {
  LineMap base;
  AdjointSide side;
};

struct LineMap::Chain {
  LineMap outer;
  LineMap inner;
};

struct LineMap::Repr : std::variant<LineExpr, Residual, Chain> {
  using variant::variant;
};

LineMap compose(const LineMap& outer, const LineMap& inner);

inline LineMap rebind(const LineMap& map, const LineSystem& source, const LineSystem& target) {
  return map.rebound(source, target);
}

// Some x with F(x) equivalent to y, searched on a lattice fine enough to hold
// the preimages of grid points under the closed family. Requires F monotone.
std::optional<Rational> find_preimage(const LineMap& map, const Rational& y);

LineMap identity_map(const LineSystem& system);

// Closed-family expression agreeing with map (up to adiabatic equivalence in
// the target) on every source probe, if one of affine / floor_div / ceil_div
// fits.
std::optional<LineExpr> recognize_closed_form(const LineMap& map);

}  // namespace entropy_adjoint
