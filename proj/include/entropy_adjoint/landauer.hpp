#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "entropy_adjoint/errors.hpp"
#include "entropy_adjoint/galois.hpp"
#include "entropy_adjoint/space.hpp"

namespace entropy_adjoint {

enum class StepClass { reversible = 0, irreversible_increasing = 1, entropy_decreasing = 2 };

std::string to_string(StepClass c);

template <EntropicSpace S>
struct ProcessStep {
  std::shared_ptr<const S> system;
  typename S::state_type pre;
  typename S::state_type post;
};

template <EntropicSpace S>
ProcessStep<S> make_step(const S& system, typename S::state_type pre, typename S::state_type post) {
  return ProcessStep<S>{std::make_shared<const S>(system), std::move(pre), std::move(post)};
}

template <EntropicSpace S>
StepClass classify_step(const ProcessStep<S>& step) {
  const S& s = *step.system;
  if (!s.contains(step.pre) || !s.contains(step.post)) {
    throw InputError("step " + s.format(step.pre) + " -> " + s.format(step.post) + " leaves the carrier");
  }
  const Rational before = s.entropy(step.pre);
  const Rational after = s.entropy(step.post);
  if (before == after) return StepClass::reversible;
  return before < after ? StepClass::irreversible_increasing : StepClass::entropy_decreasing;
}

// (pre -> post) becomes (F pre -> F post). Works on steps, so F may merge states.
template <OrderMap M>
  requires EntropicSpace<typename M::source_type> && EntropicSpace<typename M::target_type>
ProcessStep<typename M::target_type> transfer_step(const M& f, const ProcessStep<typename M::source_type>& step) {
  if (!same_carrier(f.source(), *step.system)) throw InputError("step does not live in the source of " + f.describe());
  return make_step(f.target(), f(step.pre), f(step.post));
}

// Counts over (source class) x (target class). The 2x2 reversible/irreversible
// block is the occupancy; anything touching a decreasing step is tallied apart.
class TransferTable {
 public:
  void add(StepClass from, StepClass to) { ++cells_[index(from)][index(to)]; }

  std::size_t count(StepClass from, StepClass to) const { return cells_[index(from)][index(to)]; }
  bool occupied(StepClass from, StepClass to) const { return count(from, to) > 0; }
  std::size_t decreasing() const;
  std::size_t total() const;
  // Occupied cells of the reversible/irreversible block.
  std::vector<std::pair<StepClass, StepClass>> occupancy() const;

  // Rows are source classes; columns reversible, irreversible, decreasing.
  void write_csv(std::ostream& out) const;

  friend TransferTable operator+(const TransferTable& a, const TransferTable& b);
  friend bool operator==(const TransferTable&, const TransferTable&) = default;

 private:
  static std::size_t index(StepClass c) { return static_cast<std::size_t>(c); }

  std::array<std::array<std::size_t, 3>, 3> cells_{};
};

enum class FunctorChoice { left, right };

template <OrderMap M, class State>
TransferTable tabulate_transfers(const M& f, const std::vector<std::pair<State, State>>& steps) {
  TransferTable table;
  const auto src = std::make_shared<const typename M::source_type>(f.source());
  for (const auto& [pre, post] : steps) {
    const ProcessStep<typename M::source_type> step{src, pre, post};
    table.add(classify_step(step), classify_step(transfer_step(f, step)));
  }
  return table;
}

// Steps are taken in the source of the chosen functor (C for F, D for G).
template <OrderMap MF, OrderMap MG, class State>
TransferTable empirical_table(const Connection<MF, MG>& conn, FunctorChoice choice,
                              const std::vector<std::pair<State, State>>& steps) {
  if (!conn.verified()) throw InputError("transfer tables need a verified connection");
  if (choice == FunctorChoice::left) {
    if constexpr (std::is_same_v<State, source_state_t<MF>>) return tabulate_transfers(conn.left, steps);
  } else {
    if constexpr (std::is_same_v<State, source_state_t<MG>>) return tabulate_transfers(conn.right, steps);
  }
  throw InputError("steps do not live in the source of the chosen functor");
}

// Every ordered pair of probe states.
template <OrderedSpace S>
std::vector<std::pair<typename S::state_type, typename S::state_type>> all_probe_steps(const S& s) {
  const auto xs = s.probes();
  std::vector<std::pair<typename S::state_type, typename S::state_type>> out;
  out.reserve(xs.size() * xs.size());
  for (const auto& a : xs) {
    for (const auto& b : xs) out.emplace_back(a, b);
  }
  return out;
}

// Possibility tables: a pattern forbids some off-diagonal cells of the
// occupancy block. case1 forbids irreversible -> reversible (the shape of the
// classic Landauer table), case2 forbids reversible -> irreversible, case3
// forbids both.
enum class CasePattern { case1, case2, case3 };

std::string to_string(CasePattern p);
bool allows(CasePattern p, StepClass from, StepClass to);

// Subset matching: every occupied cell must be allowed by the pattern.
std::vector<CasePattern> match_case_patterns(const TransferTable& table);

}  // namespace entropy_adjoint
