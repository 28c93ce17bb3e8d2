#include "entropy_adjoint/landauer.hpp"

namespace entropy_adjoint {

std::string to_string(StepClass c) {
  switch (c) {
    case StepClass::reversible:
      return "reversible";
    case StepClass::irreversible_increasing:
      return "irreversible";
    case StepClass::entropy_decreasing:
      return "decreasing";
  }
  return "?";
}

std::size_t TransferTable::decreasing() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == 2 || j == 2) n += cells_[i][j];
    }
  }
  return n;
}

std::size_t TransferTable::total() const {
  std::size_t n = 0;
  for (const auto& row : cells_) {
    for (std::size_t c : row) n += c;
  }
  return n;
}

std::vector<std::pair<StepClass, StepClass>> TransferTable::occupancy() const {
  std::vector<std::pair<StepClass, StepClass>> out;
  for (StepClass from : {StepClass::reversible, StepClass::irreversible_increasing}) {
    for (StepClass to : {StepClass::reversible, StepClass::irreversible_increasing}) {
      if (occupied(from, to)) out.emplace_back(from, to);
    }
  }
  return out;
}

void TransferTable::write_csv(std::ostream& out) const {
  out << "source,reversible,irreversible,decreasing\n";
  for (StepClass from : {StepClass::reversible, StepClass::irreversible_increasing, StepClass::entropy_decreasing}) {
    out << to_string(from);
    for (const std::size_t c : cells_[index(from)]) out << ',' << c;
    out << '\n';
  }
}

TransferTable operator+(const TransferTable& a, const TransferTable& b) {
  TransferTable out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out.cells_[i][j] = a.cells_[i][j] + b.cells_[i][j];
  }
  return out;
}

std::string to_string(CasePattern p) {
  switch (p) {
    case CasePattern::case1:
      return "case1";
    case CasePattern::case2:
      return "case2";
    case CasePattern::case3:
      return "case3";
  }
  return "?";
}

bool allows(CasePattern p, StepClass from, StepClass to) {
  const bool irrev_to_rev = from == StepClass::irreversible_increasing && to == StepClass::reversible;
  const bool rev_to_irrev = from == StepClass::reversible && to == StepClass::irreversible_increasing;
  switch (p) {
    case CasePattern::case1:
      return !irrev_to_rev;
    case CasePattern::case2:
      return !rev_to_irrev;
    case CasePattern::case3:
      return !irrev_to_rev && !rev_to_irrev;
  }
  return false;
}

std::vector<CasePattern> match_case_patterns(const TransferTable& table) {
  std::vector<CasePattern> out;
  for (CasePattern p : {CasePattern::case1, CasePattern::case2, CasePattern::case3}) {
    bool ok = true;
    for (const auto& [from, to] : table.occupancy()) ok = ok && allows(p, from, to);
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace entropy_adjoint
