#include "entropy_adjoint/entropy_system.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "entropy_adjoint/errors.hpp"

namespace entropy_adjoint {

namespace {

constexpr std::size_t kAdditivitySample = 8;

std::vector<char> induced_relation(const std::vector<Rational>& entropy) {
  const std::size_t n = entropy.size();
  std::vector<char> relation(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) relation[i * n + j] = entropy[i] <= entropy[j] ? 1 : 0;
  }
  return relation;
}

void require_positive(const Rational& lambda) {
  if (lambda <= 0) throw InputError("scaling factor must be positive, got " + to_string(lambda));
}

void check_additive_composite(const FiniteEntropySystem& composite, AxiomReport& report) {
  const Decomposition* parts = composite.decomposition();
  if (parts == nullptr) return;
  for (std::size_t i = 0; i < composite.size(); ++i) {
    const auto [l, r] = parts->parts[i];
    const Rational expected = parts->left->entropy(l) + parts->right->entropy(r);
    if (composite.entropy(i) != expected) {
      report.additivity_ok = false;
      report.witnesses.push_back(fmt::format("additivity: S({}) = {} but S({}) + S({}) = {}", composite.label(i),
                                             to_string(composite.entropy(i)), parts->left->label(l),
                                             parts->right->label(r), to_string(expected)));
    }
  }
}

}  // namespace

std::optional<std::size_t> ScalingAction::apply(const Rational& lambda, std::size_t x) const {
  switch (kind_) {
    case Kind::none:
      return std::nullopt;
    case Kind::trivial:
      return x;
    case Kind::table: {
      auto it = table_.find(lambda);
      if (it == table_.end() || x >= it->second.size()) return std::nullopt;
      return it->second[x];
    }
  }
  return std::nullopt;
}

FiniteEntropySystem FiniteEntropySystem::from_table(std::vector<std::string> states, std::vector<Rational> entropy,
                                                    std::size_t pair_cap) {
  if (states.size() != entropy.size()) {
    throw InputError(fmt::format("{} states but {} entropy values", states.size(), entropy.size()));
  }
  auto relation = induced_relation(entropy);
  return FiniteEntropySystem(FiniteOrder::from_relation(std::move(states), std::move(relation), pair_cap),
                             std::move(entropy));
}

FiniteEntropySystem FiniteEntropySystem::with_scaling(ScalingAction action) const {
  if (action.kind() == ScalingAction::Kind::table) {
    for (const auto& [lambda, row] : action.entries()) {
      require_positive(lambda);
      if (row.size() != size()) throw InputError("scaling table row for " + to_string(lambda) + " has wrong size");
      for (const auto& target : row) {
        if (target && !contains(*target)) throw InputError("scaling table maps outside the carrier");
      }
    }
  }
  FiniteEntropySystem copy = *this;
  copy.scaling_ = std::move(action);
  return copy;
}

FiniteEntropySystem FiniteEntropySystem::with_decomposition(Decomposition parts) const {
  if (parts.parts.size() != size() || !parts.left || !parts.right) {
    throw InputError("decomposition must name components for every state");
  }
  FiniteEntropySystem copy = *this;
  copy.decomposition_ = std::make_shared<const Decomposition>(std::move(parts));
  return copy;
}

const Rational& FiniteEntropySystem::entropy(std::size_t x) const {
  if (!contains(x)) throw InputError(fmt::format("state index {} is not in the carrier", x));
  return entropy_[x];
}

std::optional<std::size_t> FiniteEntropySystem::scale(const Rational& lambda, std::size_t x) const {
  require_positive(lambda);
  if (!contains(x)) throw InputError(fmt::format("state index {} is not in the carrier", x));
  return scaling_.apply(lambda, x);
}

std::string to_string(LineEntropy entropy) { return entropy == LineEntropy::identity ? "identity" : "floor"; }

Rational LineSystem::entropy(const Rational& x) const {
  if (!contains(x)) throw InputError("state " + to_string(x) + " is not on the " + to_string(line_.kind()) + " line");
  return entropy_ == LineEntropy::identity ? x : entropy_adjoint::floor(x);
}

bool LineSystem::leq(const Rational& x, const Rational& y) const { return entropy(x) <= entropy(y); }

std::optional<Rational> LineSystem::scale(const Rational& lambda, const Rational& x) const {
  require_positive(lambda);
  const Rational y = lambda * x;
  if (!contains(y)) return std::nullopt;
  return y;
}

Rational LineSystem::canonical(const Rational& x) const {
  return entropy_ == LineEntropy::identity ? x : entropy_adjoint::floor(x);
}

std::string LineSystem::describe() const {
  return fmt::format("{} (S = {})", to_string(line_.kind()), entropy_ == LineEntropy::identity ? "x" : "floor(x)");
}

LineSystem numeric_line_system(LineKind kind, const std::string& descriptor, int grid_n) {
  LineEntropy entropy;
  if (descriptor == "identity") {
    entropy = LineEntropy::identity;
  } else if (descriptor == "floor") {
    entropy = LineEntropy::floor;
  } else {
    throw InputError("unsupported entropy descriptor '" + descriptor + "' (expected identity or floor)");
  }
  return LineSystem(NumericLine(kind, grid_n), entropy);
}

FiniteEntropySystem compose_systems(const FiniteEntropySystem& left, const FiniteEntropySystem& right,
                                    const EntropyCombiner& combine, std::size_t pair_cap) {
  const std::size_t n1 = left.size();
  const std::size_t n2 = right.size();
  const std::size_t n = n1 * n2;
  if (n / n1 != n2 || n * n > pair_cap) {
    throw InputError(fmt::format("composite of {} x {} states exceeds the pair cap of {}", n1, n2, pair_cap));
  }
  std::vector<std::string> labels;
  std::vector<Rational> entropy;
  Decomposition parts{std::make_shared<const FiniteEntropySystem>(left),
                      std::make_shared<const FiniteEntropySystem>(right), {}};
  labels.reserve(n);
  entropy.reserve(n);
  parts.parts.reserve(n);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      labels.push_back("(" + left.label(i) + "," + right.label(j) + ")");
      entropy.push_back(combine(left.entropy(i), right.entropy(j)));
      parts.parts.emplace_back(i, j);
    }
  }
  return FiniteEntropySystem::from_table(std::move(labels), std::move(entropy), pair_cap)
      .with_decomposition(std::move(parts));
}

FiniteEntropySystem compose_additive(const FiniteEntropySystem& left, const FiniteEntropySystem& right,
                                     std::size_t pair_cap) {
  return compose_systems(left, right, [](const Rational& a, const Rational& b) { return a + b; }, pair_cap);
}

FiniteEntropySystem materialize(const LineSystem& line, std::size_t max_points) {
  auto grid = line.probes();
  if (grid.size() > max_points) grid.resize(max_points);
  std::vector<std::string> labels;
  std::vector<Rational> entropy;
  for (const auto& x : grid) {
    labels.push_back(line.format(x));
    entropy.push_back(line.entropy(x));
  }
  return FiniteEntropySystem::from_table(std::move(labels), std::move(entropy),
                                         std::max(kDefaultPairCap, grid.size() * grid.size()));
}

FiniteEntropySystem compose_additive(const LineSystem& left, const LineSystem& right, std::size_t pair_cap) {
  const auto a = materialize(left, left.probes().size());
  const auto b = materialize(right, right.probes().size());
  return compose_additive(a, b, pair_cap);
}

FiniteEntropySystem scale_extensive(const FiniteEntropySystem& system, const Rational& lambda) {
  require_positive(lambda);
  if (lambda == 1) return system;
  std::vector<std::string> labels;
  std::vector<Rational> entropy;
  for (std::size_t i = 0; i < system.size(); ++i) {
    labels.push_back(to_string(lambda) + "*" + system.label(i));
    entropy.push_back(lambda * system.entropy(i));
  }
  return FiniteEntropySystem::from_table(std::move(labels), std::move(entropy),
                                         std::max(kDefaultPairCap, system.size() * system.size()));
}

Rational scale_extensive(const LineSystem& system, const Rational& lambda, const Rational& x) {
  if (!system.contains(x)) throw InputError("state " + to_string(x) + " is not in the carrier");
  auto y = system.scale(lambda, x);
  if (!y) {
    throw InputError(fmt::format("{} * {} leaves the {} carrier", to_string(lambda), to_string(x),
                                 to_string(system.line().kind())));
  }
  return *y;
}

AxiomReport check_axioms(const FiniteEntropySystem& system, const std::vector<Rational>& probe_lambdas) {
  for (const auto& lambda : probe_lambdas) require_positive(lambda);
  AxiomReport report;
  const std::size_t n = system.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (system.leq(x, y) != (system.entropy(x) <= system.entropy(y))) {
        report.monotonicity_ok = false;
        report.witnesses.push_back(fmt::format("monotonicity: ({}, {}) with S = {}, {}", system.label(x),
                                               system.label(y), to_string(system.entropy(x)),
                                               to_string(system.entropy(y))));
      }
    }
  }

  if (system.decomposition() != nullptr) {
    check_additive_composite(system, report);
  } else {
    std::vector<std::string> labels;
    std::vector<Rational> entropy;
    for (std::size_t i = 0; i < std::min(n, kAdditivitySample); ++i) {
      labels.push_back(system.label(i));
      entropy.push_back(system.entropy(i));
    }
    const auto sample = FiniteEntropySystem::from_table(std::move(labels), std::move(entropy));
    check_additive_composite(compose_additive(sample, sample), report);
  }

  if (system.scaling().kind() != ScalingAction::Kind::none) {
    for (const auto& lambda : probe_lambdas) {
      for (std::size_t x = 0; x < n; ++x) {
        auto y = system.scale(lambda, x);
        if (!y) continue;
        ++report.extensivity_checked;
        if (system.entropy(*y) != lambda * system.entropy(x)) {
          report.extensivity_ok = false;
          report.witnesses.push_back(fmt::format("extensivity: S({} . {}) = S({}) = {} but {} * S({}) = {}",
                                                 to_string(lambda), system.label(x), system.label(*y),
                                                 to_string(system.entropy(*y)), to_string(lambda),
                                                 system.label(x), to_string(lambda * system.entropy(x))));
        }
      }
    }
  }
  return report;
}

AxiomReport check_axioms(const LineSystem& system, const std::vector<Rational>& probe_lambdas) {
  for (const auto& lambda : probe_lambdas) require_positive(lambda);
  AxiomReport report;
  const auto grid = system.probes();
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      if (system.leq(x, y) != (system.entropy(x) <= system.entropy(y))) {
        report.monotonicity_ok = false;
        report.witnesses.push_back("monotonicity: (" + system.format(x) + ", " + system.format(y) + ")");
      }
    }
  }
  const auto sample = materialize(system, kAdditivitySample);
  check_additive_composite(compose_additive(sample, sample), report);
  if (!report.additivity_ok && report.witnesses.empty()) report.witnesses.emplace_back("additivity");

  for (const auto& lambda : probe_lambdas) {
    for (const auto& x : grid) {
      auto y = system.scale(lambda, x);
      if (!y) continue;
      ++report.extensivity_checked;
      if (system.entropy(*y) != lambda * system.entropy(x)) {
        report.extensivity_ok = false;
        report.witnesses.push_back(fmt::format("extensivity: S({} * {}) = {} but {} * S({}) = {}", to_string(lambda),
                                               system.format(x), to_string(system.entropy(*y)), to_string(lambda),
                                               system.format(x), to_string(lambda * system.entropy(x))));
      }
    }
  }
  return report;
}

AxiomReport check_axioms(const EntropySystem& system, const std::vector<Rational>& probe_lambdas) {
  return std::visit([&](const auto& s) { return check_axioms(s, probe_lambdas); }, system);
}

}  // namespace entropy_adjoint
