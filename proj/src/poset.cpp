#include "entropy_adjoint/poset.hpp"

#include <algorithm>
#include <cctype>
#include <fmt/format.h>

#include "entropy_adjoint/errors.hpp"

namespace entropy_adjoint {

namespace {

void check_cap(std::size_t n, std::size_t pair_cap) {
  if (n * n > pair_cap) {
    throw InputError(fmt::format("relation over {} states exceeds the pair cap of {}", n, pair_cap));
  }
}

std::string dot_id(const std::string& label) {
  const bool bare = !label.empty() && std::all_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
  if (bare && !std::isdigit(static_cast<unsigned char>(label.front()))) return label;
  std::string quoted = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

FiniteOrder FiniteOrder::from_relation(std::vector<std::string> elements, std::vector<char> relation,
                                       std::size_t pair_cap) {
  const std::size_t n = elements.size();
  if (n == 0) throw InputError("an order needs at least one element");
  check_cap(n, pair_cap);
  if (relation.size() != n * n) throw InputError("relation table has the wrong size");

  FiniteOrder order;
  for (std::size_t i = 0; i < n; ++i) {
    if (!order.index_.emplace(elements[i], i).second) {
      throw InputError("duplicate state '" + elements[i] + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) relation[i * n + i] = 1;
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!relation[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (relation[k * n + j]) relation[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n && order.is_poset_; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (relation[i * n + j] && relation[j * n + i]) {
        order.is_poset_ = false;
        break;
      }
    }
  }
  order.elements_ = std::move(elements);
  order.relation_ = std::move(relation);
  return order;
}

FiniteOrder FiniteOrder::build(std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& declared_pairs,
                               std::size_t pair_cap) {
  const std::size_t n = elements.size();
  if (n == 0) throw InputError("an order needs at least one element");
  check_cap(n, pair_cap);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], i);
  std::vector<char> relation(n * n, 0);
  for (const auto& [a, b] : declared_pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw InputError("unknown element '" + a + "' in declared pair");
    if (ib == index.end()) throw InputError("unknown element '" + b + "' in declared pair");
    relation[ia->second * n + ib->second] = 1;
  }
  return from_relation(std::move(elements), std::move(relation), pair_cap);
}

const std::string& FiniteOrder::label(std::size_t x) const {
  if (!contains(x)) throw InputError(fmt::format("state index {} is not in the carrier", x));
  return elements_[x];
}

std::size_t FiniteOrder::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InputError("state '" + label + "' is not in the carrier");
  return it->second;
}

bool FiniteOrder::leq(std::size_t x, std::size_t y) const {
  const std::size_t n = elements_.size();
  if (x >= n || y >= n) throw InputError("state index is not in the carrier");
  return relation_[x * n + y] != 0;
}

bool FiniteOrder::leq(const std::string& x, const std::string& y) const {
  return leq(index_of(x), index_of(y));
}

std::vector<std::size_t> FiniteOrder::probes() const {
  std::vector<std::size_t> all(elements_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

AdiabatQuotient quotient_adiabats(const FiniteOrder& preorder) {
  const std::size_t n = preorder.size();
  struct {
    std::vector<std::size_t> class_of;
    std::vector<std::vector<std::size_t>> members;
  } q;
  q.class_of.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (q.class_of[i] != n) continue;
    const std::size_t cls = q.members.size();
    q.members.emplace_back();
    for (std::size_t j = i; j < n; ++j) {
      if (preorder.leq(i, j) && preorder.leq(j, i)) {
        q.class_of[j] = cls;
        q.members.back().push_back(j);
      }
    }
  }
  const std::size_t m = q.members.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& cls : q.members) {
    std::string label;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (k) label += '~';
      label += preorder.label(cls[k]);
    }
    labels.push_back(std::move(label));
  }
  std::vector<char> relation(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      relation[a * m + b] = preorder.leq(q.members[a].front(), q.members[b].front()) ? 1 : 0;
    }
  }
  return AdiabatQuotient{FiniteOrder::from_relation(std::move(labels), std::move(relation), m * m),
                         std::move(q.class_of), std::move(q.members)};
}

HasseDiagram hasse_edges(const FiniteOrder& poset) {
  if (!poset.is_poset()) {
    throw InputError("Hasse diagram needs an antisymmetric order; quotient the adiabats first");
  }
  const std::size_t n = poset.size();
  HasseDiagram diagram;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !poset.leq(x, y)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < n && covered; ++z) {
        if (z != x && z != y && poset.leq(x, z) && poset.leq(z, y)) covered = false;
      }
      if (covered) diagram.edges.emplace_back(x, y);
    }
  }
  return diagram;
}

std::string to_dot(const FiniteOrder& poset, const HasseDiagram& diagram) {
  std::vector<std::pair<std::string, std::string>> lines;
  lines.reserve(diagram.edges.size());
  for (const auto& [x, y] : diagram.edges) lines.emplace_back(poset.label(x), poset.label(y));
  std::sort(lines.begin(), lines.end());
  std::string out = "digraph hasse {\n";
  for (const auto& [a, b] : lines) out += "  " + dot_id(a) + " -> " + dot_id(b) + ";\n";
  out += "}\n";
  return out;
}

FiniteOrder product_order(const FiniteOrder& left, const FiniteOrder& right, std::size_t pair_cap) {
  const std::size_t n1 = left.size();
  const std::size_t n2 = right.size();
  const std::size_t n = n1 * n2;
  if (n1 != 0 && n / n1 != n2) throw InputError("product carrier is too large");
  check_cap(n, pair_cap);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) labels.push_back("(" + left.label(i) + "," + right.label(j) + ")");
  }
  std::vector<char> relation(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      relation[a * n + b] = left.leq(a / n2, b / n2) && right.leq(a % n2, b % n2) ? 1 : 0;
    }
  }
  return FiniteOrder::from_relation(std::move(labels), std::move(relation), pair_cap);
}

std::string to_string(LineKind kind) { return kind == LineKind::reals ? "reals" : "naturals"; }

NumericLine::NumericLine(LineKind kind, int grid_n, std::int64_t resolution)
    : kind_(kind), grid_n_(grid_n), resolution_(kind == LineKind::naturals ? 1 : resolution) {
  if (grid_n < 1) throw InputError("probe grid size must be at least 1");
  if (resolution < 1) throw InputError("probe grid resolution must be positive");
  if (static_cast<std::int64_t>(grid_n_) * resolution_ > 1'000'000) {
    throw InputError(fmt::format("probe grid of {} x {} points is too fine", grid_n_, resolution_));
  }
}

bool NumericLine::contains(const Rational& x) const {
  if (x < 0) return false;
  return kind_ == LineKind::reals || is_integer(x);
}

std::vector<Rational> NumericLine::grid() const {
  const std::int64_t last = static_cast<std::int64_t>(grid_n_) * resolution_;
  std::vector<Rational> points;
  points.reserve(static_cast<std::size_t>(last + 1));
  for (std::int64_t k = 0; k <= last; ++k) points.emplace_back(k, resolution_);
  return points;
}

NumericLine NumericLine::refined(std::int64_t q) const {
  return NumericLine(kind_, grid_n_, lcm(resolution_, q));
}

}  // namespace entropy_adjoint
