#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "entropy_adjoint/entropy_system.hpp"
#include "entropy_adjoint/errors.hpp"
#include "entropy_adjoint/poset.hpp"

namespace entropy_adjoint {

// A carrier with a preorder and a finite probe set on which every check is
// exhaustive. FiniteOrder, FiniteEntropySystem and LineSystem model it.
template <class S>
concept OrderedSpace = requires(const S& s, const typename S::state_type& x) {
  typename S::state_type;
  { s.probes() } -> std::convertible_to<std::vector<typename S::state_type>>;
  { s.leq(x, x) } -> std::convertible_to<bool>;
  { s.contains(x) } -> std::convertible_to<bool>;
  { s.format(x) } -> std::convertible_to<std::string>;
};

template <class S>
concept EntropicSpace = OrderedSpace<S> && requires(const S& s, const typename S::state_type& x, const Rational& l) {
  { s.entropy(x) } -> std::convertible_to<Rational>;
  { s.scale(l, x) } -> std::convertible_to<std::optional<typename S::state_type>>;
};

template <class M>
concept OrderMap = OrderedSpace<typename M::source_type> && OrderedSpace<typename M::target_type> &&
    requires(const M& m, const typename M::source_type::state_type& x) {
  { m.source() } -> std::convertible_to<const typename M::source_type&>;
  { m.target() } -> std::convertible_to<const typename M::target_type&>;
  { m(x) } -> std::convertible_to<typename M::target_type::state_type>;
  { m.describe() } -> std::convertible_to<std::string>;
  { m.scaling_exponent() } -> std::convertible_to<std::optional<Rational>>;
};

template <class M>
using source_state_t = typename M::source_type::state_type;
template <class M>
using target_state_t = typename M::target_type::state_type;

// Adiabatic equivalence: equality in the adiabat quotient.
template <OrderedSpace S>
bool equivalent(const S& space, const typename S::state_type& x, const typename S::state_type& y) {
  return space.leq(x, y) && space.leq(y, x);
}

inline bool same_carrier(const FiniteOrder& a, const FiniteOrder& b) { return a == b; }
inline bool same_carrier(const FiniteEntropySystem& a, const FiniteEntropySystem& b) {
  return a.order() == b.order() && a.entropies() == b.entropies();
}
inline bool same_carrier(const LineSystem& a, const LineSystem& b) { return a.same_carrier(b); }

inline FiniteOrder merge_carriers(const FiniteOrder& a, const FiniteOrder&) { return a; }
inline FiniteEntropySystem merge_carriers(const FiniteEntropySystem& a, const FiniteEntropySystem&) { return a; }
inline LineSystem merge_carriers(const LineSystem& a, const LineSystem& b) {
  return a.refined(b.line().resolution());
}

}  // namespace entropy_adjoint
