#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "entropy_adjoint/errors.hpp"
#include "entropy_adjoint/rational.hpp"
#include "entropy_adjoint/space.hpp"

namespace entropy_adjoint {

// Explicit state table between two finite carriers. Carriers are shared and
// immutable, so copies are cheap.
template <OrderedSpace C, OrderedSpace D>
class FiniteMap {
 public:
  using source_type = C;
  using target_type = D;

  FiniteMap(std::shared_ptr<const C> source, std::shared_ptr<const D> target, std::vector<std::size_t> table,
            std::optional<Rational> scaling_exponent = std::nullopt)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)),
        exponent_(std::move(scaling_exponent)) {
    if (!source_ || !target_) throw InputError("finite map needs both carriers");
    if (table_.size() != source_->size()) {
      throw InputError(fmt::format("map table has {} entries for {} source states", table_.size(), source_->size()));
    }
    for (std::size_t x = 0; x < table_.size(); ++x) {
      if (!target_->contains(table_[x])) {
        throw InputError("map sends '" + source_->format(x) + "' outside the target carrier");
      }
    }
  }

  std::size_t operator()(std::size_t x) const {
    if (x >= table_.size()) throw InputError(fmt::format("state index {} is not in the source carrier", x));
    return table_[x];
  }

  const C& source() const { return *source_; }
  const D& target() const { return *target_; }
  const std::shared_ptr<const C>& source_ptr() const { return source_; }
  const std::shared_ptr<const D>& target_ptr() const { return target_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::optional<Rational> scaling_exponent() const { return exponent_; }

  FiniteMap with_scaling_exponent(std::optional<Rational> exponent) const {
    return FiniteMap(source_, target_, table_, std::move(exponent));
  }

  std::string describe() const {
    std::string out = "{";
    for (std::size_t x = 0; x < table_.size(); ++x) {
      if (x) out += ", ";
      out += source_->format(x) + " -> " + target_->format(table_[x]);
    }
    return out + "}";
  }

  friend bool operator==(const FiniteMap& a, const FiniteMap& b) { return a.table_ == b.table_; }

 private:
  std::shared_ptr<const C> source_;
  std::shared_ptr<const D> target_;
  std::vector<std::size_t> table_;
  std::optional<Rational> exponent_;
};

template <class C, class D, class E>
FiniteMap<C, E> compose(const FiniteMap<D, E>& outer, const FiniteMap<C, D>& inner) {
  if (!same_carrier(outer.source(), inner.target())) {
    throw InputError("cannot compose maps: middle carriers differ");
  }
  std::vector<std::size_t> table(inner.table().size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = outer(inner(x));
  std::optional<Rational> exponent;
  if (outer.scaling_exponent() && inner.scaling_exponent()) {
    exponent = *outer.scaling_exponent() * *inner.scaling_exponent();
  }
  return FiniteMap<C, E>(inner.source_ptr(), outer.target_ptr(), std::move(table), exponent);
}

// Carriers of finite maps never change resolution.
template <class C, class D>
FiniteMap<C, D> rebind(const FiniteMap<C, D>& map, const C&, const D&) {
  return map;
}

template <class C, class D>
std::optional<std::size_t> find_preimage(const FiniteMap<C, D>& map, std::size_t y) {
  for (std::size_t x = 0; x < map.table().size(); ++x) {
    if (equivalent(map.target(), map(x), y)) return x;
  }
  return std::nullopt;
}

template <OrderedSpace S>
FiniteMap<S, S> identity_map(std::shared_ptr<const S> space) {
  std::vector<std::size_t> table(space->size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = x;
  return FiniteMap<S, S>(space, space, std::move(table), Rational(1));
}

}  // namespace entropy_adjoint
