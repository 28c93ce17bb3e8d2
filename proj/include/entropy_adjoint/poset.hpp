#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entropy_adjoint/rational.hpp"

namespace entropy_adjoint {

// Relations hold at most this many (x, y) pairs, i.e. n*n <= cap.
inline constexpr std::size_t kDefaultPairCap = 10'000;

// A finite preorder over opaque labelled states. The stored relation is the
// reflexive-transitive closure of whatever was declared; antisymmetry is a
// flag, not a requirement.
class FiniteOrder {
 public:
  using state_type = std::size_t;

  static FiniteOrder build(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& declared_pairs,
                           std::size_t pair_cap = kDefaultPairCap);

  // relation is row-major n*n; entry [x*n + y] != 0 declares x <= y.
  static FiniteOrder from_relation(std::vector<std::string> elements, std::vector<char> relation,
                                   std::size_t pair_cap = kDefaultPairCap);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(std::size_t x) const;
  std::size_t index_of(const std::string& label) const;
  bool contains(std::size_t x) const { return x < elements_.size(); }

  bool leq(std::size_t x, std::size_t y) const;
  bool leq(const std::string& x, const std::string& y) const;
  bool is_poset() const { return is_poset_; }

  std::vector<std::size_t> probes() const;
  std::string format(std::size_t x) const { return label(x); }

  friend bool operator==(const FiniteOrder& a, const FiniteOrder& b) {
    return a.elements_ == b.elements_ && a.relation_ == b.relation_;
  }

 private:
  FiniteOrder() = default;

  std::vector<std::string> elements_;
  std::map<std::string, std::size_t> index_;
  std::vector<char> relation_;
  bool is_poset_ = true;
};

// Adiabat quotient of a preorder: mutually related states share a class.
struct AdiabatQuotient {
  FiniteOrder poset;
  std::vector<std::size_t> class_of;             // element -> class index
  std::vector<std::vector<std::size_t>> members;  // class -> elements, ascending
};

AdiabatQuotient quotient_adiabats(const FiniteOrder& preorder);

// Covering pairs (x, y): x < y with nothing strictly between.
struct HasseDiagram {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

HasseDiagram hasse_edges(const FiniteOrder& poset);

// One `a -> b;` line per covering edge, sorted lexicographically by label.
std::string to_dot(const FiniteOrder& poset, const HasseDiagram& diagram);

// Componentwise order on the cartesian product. State (i, j) has index
// i * right.size() + j and label "(x,y)".
FiniteOrder product_order(const FiniteOrder& left, const FiniteOrder& right,
                          std::size_t pair_cap = kDefaultPairCap);

enum class LineKind { reals, naturals };

std::string to_string(LineKind kind);

// Exact-rational numeric carrier (R>=0 or N>=0) with a finite probe grid
// {k/q : 0 <= k <= N*q}. On the naturals the resolution is always 1.
class NumericLine {
 public:
  static constexpr int kDefaultGridN = 30;

  NumericLine(LineKind kind, int grid_n = kDefaultGridN, std::int64_t resolution = 1);

  LineKind kind() const { return kind_; }
  int grid_n() const { return grid_n_; }
  std::int64_t resolution() const { return resolution_; }

  bool contains(const Rational& x) const;
  std::vector<Rational> grid() const;

  // Same carrier with resolution lcm(current, q).
  NumericLine refined(std::int64_t q) const;

  friend bool operator==(const NumericLine&, const NumericLine&) = default;

 private:
  LineKind kind_;
  int grid_n_;
  std::int64_t resolution_;
};

}  // namespace entropy_adjoint
