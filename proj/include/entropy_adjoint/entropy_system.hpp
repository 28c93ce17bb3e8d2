#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "entropy_adjoint/poset.hpp"
#include "entropy_adjoint/rational.hpp"

namespace entropy_adjoint {

// How positive rationals act on the states of a finite system. Tables may be
// partial: a finite set cannot carry a total extensive action once entropies
// are nonzero, so undefined entries are simply absent.
class ScalingAction {
 public:
  enum class Kind { none, trivial, table };
  using Table = std::map<Rational, std::vector<std::optional<std::size_t>>>;

  static ScalingAction none() { return ScalingAction(Kind::none, {}); }
  static ScalingAction trivial() { return ScalingAction(Kind::trivial, {}); }
  static ScalingAction table(Table entries) { return ScalingAction(Kind::table, std::move(entries)); }

  Kind kind() const { return kind_; }
  const Table& entries() const { return table_; }
  std::optional<std::size_t> apply(const Rational& lambda, std::size_t x) const;

  friend bool operator==(const ScalingAction&, const ScalingAction&) = default;

 private:
  ScalingAction(Kind kind, Table table) : kind_(kind), table_(std::move(table)) {}

  Kind kind_;
  Table table_;
};

class FiniteEntropySystem;

// Records which component states a composite state was built from, so that
// additivity can be audited on the composite itself.
struct Decomposition {
  std::shared_ptr<const FiniteEntropySystem> left;
  std::shared_ptr<const FiniteEntropySystem> right;
  std::vector<std::pair<std::size_t, std::size_t>> parts;
};

// Finite carrier whose total preorder is induced by an exact entropy table:
// X <= Y iff S(X) <= S(Y).
class FiniteEntropySystem {
 public:
  using state_type = std::size_t;

  static FiniteEntropySystem from_table(std::vector<std::string> states, std::vector<Rational> entropy,
                                        std::size_t pair_cap = kDefaultPairCap);

  FiniteEntropySystem with_scaling(ScalingAction action) const;
  FiniteEntropySystem with_decomposition(Decomposition parts) const;

  const FiniteOrder& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  const std::string& label(std::size_t x) const { return order_.label(x); }
  std::size_t index_of(const std::string& label) const { return order_.index_of(label); }
  bool contains(std::size_t x) const { return order_.contains(x); }
  std::vector<std::size_t> probes() const { return order_.probes(); }
  std::string format(std::size_t x) const { return order_.label(x); }

  bool leq(std::size_t x, std::size_t y) const { return order_.leq(x, y); }
  const Rational& entropy(std::size_t x) const;
  const std::vector<Rational>& entropies() const { return entropy_; }

  const ScalingAction& scaling() const { return scaling_; }
  std::optional<std::size_t> scale(const Rational& lambda, std::size_t x) const;
  const Decomposition* decomposition() const { return decomposition_.get(); }

  friend bool operator==(const FiniteEntropySystem& a, const FiniteEntropySystem& b) {
    return a.order_ == b.order_ && a.entropy_ == b.entropy_ && a.scaling_ == b.scaling_;
  }

 private:
  FiniteEntropySystem(FiniteOrder order, std::vector<Rational> entropy)
      : order_(std::move(order)), entropy_(std::move(entropy)) {}

  FiniteOrder order_;
  std::vector<Rational> entropy_;
  ScalingAction scaling_ = ScalingAction::none();
  std::shared_ptr<const Decomposition> decomposition_;
};

enum class LineEntropy { identity, floor };

std::string to_string(LineEntropy entropy);

// A numeric line (R>=0 or N>=0) with S(x) = x or S(x) = floor(x). States are
// exact rationals; scaling acts pointwise, lambda . x = lambda * x, and is
// undefined where it leaves the carrier (non-integer results on the naturals).
class LineSystem {
 public:
  using state_type = Rational;

  LineSystem(NumericLine line, LineEntropy entropy) : line_(line), entropy_(entropy) {}

  const NumericLine& line() const { return line_; }
  LineEntropy entropy_kind() const { return entropy_; }

  bool contains(const Rational& x) const { return line_.contains(x); }
  std::vector<Rational> probes() const { return line_.grid(); }
  std::string format(const Rational& x) const { return to_display(x); }

  Rational entropy(const Rational& x) const;
  bool leq(const Rational& x, const Rational& y) const;
  std::optional<Rational> scale(const Rational& lambda, const Rational& x) const;

  // Representative of x's adiabat: x itself for S = x, floor(x) for S = floor.
  Rational canonical(const Rational& x) const;

  LineSystem refined(std::int64_t q) const { return LineSystem(line_.refined(q), entropy_); }
  bool same_carrier(const LineSystem& other) const {
    return line_.kind() == other.line_.kind() && line_.grid_n() == other.line_.grid_n() &&
           entropy_ == other.entropy_;
  }
  std::string describe() const;

  friend bool operator==(const LineSystem&, const LineSystem&) = default;

 private:
  NumericLine line_;
  LineEntropy entropy_;
};

using EntropySystem = std::variant<FiniteEntropySystem, LineSystem>;

// descriptor is "identity" or "floor".
LineSystem numeric_line_system(LineKind kind, const std::string& descriptor,
                               int grid_n = NumericLine::kDefaultGridN);

using EntropyCombiner = std::function<Rational(const Rational&, const Rational&)>;

// Product carrier with S(X, Y) = combine(S(X), S(Y)); order re-derived from S.
FiniteEntropySystem compose_systems(const FiniteEntropySystem& left, const FiniteEntropySystem& right,
                                    const EntropyCombiner& combine, std::size_t pair_cap = kDefaultPairCap);

FiniteEntropySystem compose_additive(const FiniteEntropySystem& left, const FiniteEntropySystem& right,
                                     std::size_t pair_cap = kDefaultPairCap);

// Grid-restricted composition: both lines are materialized on their probe grids.
FiniteEntropySystem compose_additive(const LineSystem& left, const LineSystem& right,
                                     std::size_t pair_cap = kDefaultPairCap);

// Finite view of a line restricted to its first max_points grid points.
FiniteEntropySystem materialize(const LineSystem& line, std::size_t max_points);

// Gamma^lambda: states relabelled "lambda*X" (unchanged for lambda = 1) with
// entropy lambda * S(X).
FiniteEntropySystem scale_extensive(const FiniteEntropySystem& system, const Rational& lambda);

// lambda . x on a numeric line; throws when lambda <= 0 or lambda * x leaves
// the carrier.
Rational scale_extensive(const LineSystem& system, const Rational& lambda, const Rational& x);

struct AxiomReport {
  bool monotonicity_ok = true;
  bool additivity_ok = true;
  bool extensivity_ok = true;
  std::size_t extensivity_checked = 0;
  std::vector<std::string> witnesses;

  bool ok() const { return monotonicity_ok && additivity_ok && extensivity_ok; }
};

AxiomReport check_axioms(const FiniteEntropySystem& system, const std::vector<Rational>& probe_lambdas);
AxiomReport check_axioms(const LineSystem& system, const std::vector<Rational>& probe_lambdas);
AxiomReport check_axioms(const EntropySystem& system, const std::vector<Rational>& probe_lambdas);

}  // namespace entropy_adjoint
