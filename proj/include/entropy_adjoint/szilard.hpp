#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "entropy_adjoint/entropy_system.hpp"
#include "entropy_adjoint/galois.hpp"
#include "entropy_adjoint/rational.hpp"

namespace entropy_adjoint::szilard {

inline constexpr double kBoltzmann = 1.380649e-23;  // J/K, exact SI value

enum class Partition { absent, middle, right_end };
enum class ParticleSide { unknown, left, right };

struct EngineState {
  Rational temperature_K;
  Rational eta;
  int memory_bits = 2;
  Partition partition = Partition::middle;
  ParticleSide particle = ParticleSide::unknown;
  std::string memory = "00";  // first two bits carry the localisation record
  unsigned omega = 2;         // microstates consistent with what the demon knows
  std::size_t cycle_index = 0;
};

// k_B T ln 2 in joules.
double bit_energy(const Rational& temperature_K);

EngineState init_engine(const Rational& temperature_K, int memory_bits, const Rational& eta);

// Entropies in bits (units of k_B ln 2), energies in joules. Work is done by
// the engine when positive.
struct StepRecord {
  std::size_t cycle = 0;
  int step = 0;
  std::string memory_op;
  bool reversible = true;
  unsigned omega = 1;
  double s_info_bits = 0;
  double work_J = 0;
  double heat_J = 0;
  double dS_sys = 0;
  double dS_env = 0;
  double dS_total = 0;
};

struct CycleRecord {
  std::size_t cycle = 0;
  std::array<StepRecord, 5> steps;

  double work() const;
  double heat() const;
  double dS_total() const;
};

CycleRecord run_cycle(EngineState& engine);

// Heat expelled by erasing n bits: eta * n * k_B T ln 2.
double erase_memory(EngineState& engine, int n_bits);

struct Totals {
  double work_J = 0;
  double heat_J = 0;
  double dS_sys = 0;
  double dS_env = 0;
  double dS_total = 0;
};

struct SzilardLedger {
  Rational temperature_K;
  Rational eta;
  std::vector<CycleRecord> records;
  Totals totals;

  void append(const CycleRecord& record);
};

SzilardLedger run_engine(const Rational& temperature_K, std::size_t cycles, const Rational& eta, int memory_bits = 2);

// Sums with an extended accumulator; audits compare against these.
Totals sum_records(const std::vector<CycleRecord>& records);

struct AuditReport {
  CheckResult step_entropy{"dS_total >= 0 at every step"};
  CheckResult cycle_entropy{"dS_total >= 0 over every cycle"};
  CheckResult work_bound{"net work <= dissipated heat over whole cycles"};
  CheckResult totals{"totals equal the sums of the records"};
  CheckResult correspondence{"K and H are mutually inverse order-isomorphisms"};

  bool ok() const {
    return step_entropy.holds && cycle_entropy.holds && work_bound.holds && totals.holds && correspondence.holds;
  }
};

AuditReport audit_ledger(const SzilardLedger& ledger);

void write_ledger_csv(std::ostream& out, const SzilardLedger& ledger);

// Logical memory states (code, m) where m counts the prior contents that are
// consistent with the current code; S = log2 m bits, m in {1, 2, 4}.
FiniteEntropySystem memory_entropy_system();
std::size_t memory_state(const FiniteEntropySystem& memory, const std::string& code, int multiplicity);

// Memory step performed by a named op on a known code ("not_id" or "and_00").
std::pair<std::size_t, std::size_t> memory_step(const FiniteEntropySystem& memory, const std::string& op,
                                                const std::string& code);

}  // namespace entropy_adjoint::szilard
