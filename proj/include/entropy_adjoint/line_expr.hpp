#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "entropy_adjoint/rational.hpp"

namespace entropy_adjoint {

// Closed family of monotone maps on numeric lines: affine a*x + b with
// a >= 0, floor(x/k), ceil(x/k), constants, and compositions thereof.
class LineExpr {
 public:
  struct Affine;
  struct FloorDiv;
  struct CeilDiv;
  struct Constant;
  struct Compose;
  using Node = std::variant<Affine, FloorDiv, CeilDiv, Constant, Compose>;

  static LineExpr affine(const Rational& slope, const Rational& offset);
  static LineExpr identity() { return affine(1, 0); }
  static LineExpr floor_div(const Rational& divisor);
  static LineExpr ceil_div(const Rational& divisor);
  static LineExpr constant(const Rational& value);
  // outer after inner: x -> outer(inner(x)).
  static LineExpr compose(const LineExpr& outer, const LineExpr& inner);

  Rational operator()(const Rational& x) const;
  const Node& node() const;

  // Probe-grid resolution that puts every breakpoint of this map, and a point
  // strictly inside every interval between breakpoints, on the grid.
  std::int64_t resolution_hint() const;

  std::string describe(const std::string& variable = "x") const;

  friend bool operator==(const LineExpr& a, const LineExpr& b);

 private:
  explicit LineExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct LineExpr::Affine {
  Rational slope;
  Rational offset;
  friend bool operator==(const Affine&, const Affine&) = default;
};
struct LineExpr::FloorDiv {
  Rational divisor;
  friend bool operator==(const FloorDiv&, const FloorDiv&) = default;
};
struct LineExpr::CeilDiv {
  Rational divisor;
  friend bool operator==(const CeilDiv&, const CeilDiv&) = default;
};
struct LineExpr::Constant {
  Rational value;
  friend bool operator==(const Constant&, const Constant&) = default;
};
struct LineExpr::Compose {
  LineExpr outer;
  LineExpr inner;
  friend bool operator==(const Compose&, const Compose&) = default;
};

inline const LineExpr::Node& LineExpr::node() const { return *node_; }

}  // namespace entropy_adjoint
