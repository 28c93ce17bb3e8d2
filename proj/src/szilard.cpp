#include "entropy_adjoint/szilard.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "entropy_adjoint/errors.hpp"
#include "entropy_adjoint/finite_map.hpp"
#include "entropy_adjoint/landauer.hpp"

namespace entropy_adjoint::szilard {

namespace {

constexpr double kRelTol = 1e-12;

bool close(double a, double b) { return std::abs(a - b) <= kRelTol * std::max({std::abs(a), std::abs(b), 1e-300}); }

StepRecord blank(std::size_t cycle, int step, const char* op, unsigned omega) {
  StepRecord r;
  r.cycle = cycle;
  r.step = step;
  r.memory_op = op;
  r.omega = omega;
  r.s_info_bits = std::log2(static_cast<double>(omega));
  return r;
}

bool classify_reversible(const std::string& op, const std::string& code) {
  static const FiniteEntropySystem memory = memory_entropy_system();
  const auto [pre, post] = memory_step(memory, op, code);
  return classify_step(make_step(memory, pre, post)) == StepClass::reversible;
}

}  // namespace

double bit_energy(const Rational& temperature_K) {
  return kBoltzmann * to_double(temperature_K) * std::numbers::ln2;
}

EngineState init_engine(const Rational& temperature_K, int memory_bits, const Rational& eta) {
  if (temperature_K <= 0) throw InputError("temperature must be positive");
  if (memory_bits < 2) throw InputError("the demon needs at least 2 memory bits");
  if (eta < 1) throw InputError("erasure efficiency below 1 would beat the Landauer bound");
  EngineState s;
  s.temperature_K = temperature_K;
  s.eta = eta;
  s.memory_bits = memory_bits;
  s.memory = std::string(static_cast<std::size_t>(memory_bits), '0');
  return s;
}

double CycleRecord::work() const {
  long double w = 0;
  for (const auto& s : steps) w += s.work_J;
  return static_cast<double>(w);
}

double CycleRecord::heat() const {
  long double q = 0;
  for (const auto& s : steps) q += s.heat_J;
  return static_cast<double>(q);
}

double CycleRecord::dS_total() const {
  long double d = 0;
  for (const auto& s : steps) d += s.dS_total;
  return static_cast<double>(d);
}

CycleRecord run_cycle(EngineState& e) {
  const double w = bit_energy(e.temperature_K);
  const double eta = to_double(e.eta);
  CycleRecord rec;
  rec.cycle = e.cycle_index;

  // 1: partition in the middle, nothing known; record reset to 00.
  e.partition = Partition::middle;
  e.particle = ParticleSide::unknown;
  e.memory.replace(0, 2, "00");
  e.omega = 2;
  rec.steps[0] = blank(rec.cycle, 1, "reset", e.omega);

  // 2: particle found on the left, recorded by NOT(x)Id: 00 -> 10.
  rec.steps[1] = blank(rec.cycle, 2, "not_id", 1);
  rec.steps[1].reversible = classify_reversible("not_id", e.memory.substr(0, 2));
  e.particle = ParticleSide::left;
  e.memory.replace(0, 2, "10");
  e.omega = 1;

  // 3: expansion starts; memory untouched.
  rec.steps[2] = blank(rec.cycle, 3, "idle", e.omega);

  // 4: partition at the right end; work k_B T ln 2 without heat flow.
  e.partition = Partition::right_end;
  rec.steps[3] = blank(rec.cycle, 4, "idle", e.omega);
  rec.steps[3].work_J = w;

  // 5: partition reinserted, record erased by AND with 00. The memory device
  // is compressed by one bit and pays eta k_B T ln 2 into the bath.
  rec.steps[4] = blank(rec.cycle, 5, "and_00", 2);
  rec.steps[4].reversible = classify_reversible("and_00", e.memory.substr(0, 2));
  rec.steps[4].work_J = -eta * w;
  rec.steps[4].heat_J = eta * w;
  rec.steps[4].dS_sys = -1;
  rec.steps[4].dS_env = eta;
  rec.steps[4].dS_total = eta - 1;
  e.partition = Partition::middle;
  e.particle = ParticleSide::unknown;
  e.memory.replace(0, 2, "00");
  e.omega = 2;

  ++e.cycle_index;
  return rec;
}

double erase_memory(EngineState& engine, int n_bits) {
  if (n_bits < 0) throw InputError("cannot erase a negative number of bits");
  if (n_bits > engine.memory_bits) {
    throw InputError(fmt::format("cannot erase {} bits from a {}-bit memory", n_bits, engine.memory_bits));
  }
  for (int i = 0; i < n_bits; ++i) engine.memory[static_cast<std::size_t>(i)] = '0';
  engine.omega = 2;
  return to_double(engine.eta) * n_bits * bit_energy(engine.temperature_K);
}

void SzilardLedger::append(const CycleRecord& record) {
  records.push_back(record);
  totals = sum_records(records);
}

Totals sum_records(const std::vector<CycleRecord>& records) {
  long double w = 0, q = 0, ss = 0, se = 0, st = 0;
  for (const auto& r : records) {
    for (const auto& s : r.steps) {
      w += s.work_J;
      q += s.heat_J;
      ss += s.dS_sys;
      se += s.dS_env;
      st += s.dS_total;
    }
  }
  return Totals{static_cast<double>(w), static_cast<double>(q), static_cast<double>(ss), static_cast<double>(se),
                static_cast<double>(st)};
}

SzilardLedger run_engine(const Rational& temperature_K, std::size_t cycles, const Rational& eta, int memory_bits) {
  EngineState engine = init_engine(temperature_K, memory_bits, eta);
  SzilardLedger ledger;
  ledger.temperature_K = temperature_K;
  ledger.eta = eta;
  ledger.records.reserve(cycles);
  for (std::size_t i = 0; i < cycles; ++i) ledger.records.push_back(run_cycle(engine));
  ledger.totals = sum_records(ledger.records);
  return ledger;
}

AuditReport audit_ledger(const SzilardLedger& ledger) {
  AuditReport r;
  long double net_work = 0, heat = 0;
  for (const auto& rec : ledger.records) {
    for (const auto& s : rec.steps) {
      r.step_entropy.expect(s.dS_total >= 0, [&] {
        return fmt::format("cycle {} step {}: dS_total = {}", s.cycle, s.step, s.dS_total);
      });
      r.totals.expect(close(s.dS_total, s.dS_sys + s.dS_env), [&] {
        return fmt::format("cycle {} step {}: dS_total {} != {} + {}", s.cycle, s.step, s.dS_total, s.dS_sys,
                           s.dS_env);
      });
      net_work += s.work_J;
      heat += s.heat_J;
    }
    r.cycle_entropy.expect(rec.dS_total() >= 0,
                           [&] { return fmt::format("cycle {}: dS_total = {}", rec.cycle, rec.dS_total()); });
    const double nw = static_cast<double>(net_work);
    const double hq = static_cast<double>(heat);
    r.work_bound.expect(nw <= hq || close(nw, hq), [&] {
      return fmt::format("after cycle {}: net work {} J exceeds heat {} J", rec.cycle, nw, hq);
    });
  }
  const Totals sums = sum_records(ledger.records);
  const auto agree = [&](const char* what, double stored, double summed) {
    r.totals.expect(close(stored, summed),
                    [&] { return fmt::format("total {}: stored {}, records sum to {}", what, stored, summed); });
  };
  agree("work", ledger.totals.work_J, sums.work_J);
  agree("heat", ledger.totals.heat_J, sums.heat_J);
  agree("dS_sys", ledger.totals.dS_sys, sums.dS_sys);
  agree("dS_env", ledger.totals.dS_env, sums.dS_env);
  agree("dS_total", ledger.totals.dS_total, sums.dS_total);

  // Localisation E = {left, right} against committed memory M = {10, 01}.
  const auto e = std::make_shared<const FiniteOrder>(FiniteOrder::build({"left", "right"}, {}));
  const auto m = std::make_shared<const FiniteOrder>(FiniteOrder::build({"10", "01"}, {}));
  const FiniteMap<FiniteOrder, FiniteOrder> k(e, m, {0, 1});
  const FiniteMap<FiniteOrder, FiniteOrder> h(m, e, {0, 1});
  const auto conn = check_connection(k, h);
  r.correspondence.expect(conn.verified(), [] { return std::string("K -| H fails"); });
  for (const auto& s : {classify_map_strength(k, h), classify_map_strength(h, k)}) {
    r.correspondence.expect(s.order_isomorphism.holds && s.gf_identity->holds && s.fg_identity->holds,
                            [] { return std::string("K, H not mutually inverse isomorphisms"); });
  }
  return r;
}

void write_ledger_csv(std::ostream& out, const SzilardLedger& ledger) {
  out << "cycle,step,memory_op,omega,s_info_bits,work_J,heat_J,dS_sys,dS_env,dS_total\n";
  for (const auto& rec : ledger.records) {
    for (const auto& s : rec.steps) {
      out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", s.cycle, s.step, s.memory_op, s.omega, s.s_info_bits,
                         s.work_J, s.heat_J, s.dS_sys, s.dS_env, s.dS_total);
    }
  }
}

FiniteEntropySystem memory_entropy_system() {
  std::vector<std::string> states;
  std::vector<Rational> entropy;
  for (const char* code : {"00", "01", "10", "11"}) {
    for (int m : {1, 2, 4}) {
      states.push_back(fmt::format("{}/{}", code, m));
      entropy.push_back(Rational(m == 1 ? 0 : m == 2 ? 1 : 2));
    }
  }
  return FiniteEntropySystem::from_table(std::move(states), std::move(entropy));
}

std::size_t memory_state(const FiniteEntropySystem& memory, const std::string& code, int multiplicity) {
  return memory.index_of(fmt::format("{}/{}", code, multiplicity));
}

std::pair<std::size_t, std::size_t> memory_step(const FiniteEntropySystem& memory, const std::string& op,
                                                const std::string& code) {
  if (code.size() != 2 || code.find_first_not_of("01") != std::string::npos) {
    throw InputError("memory code must be two bits, got '" + code + "'");
  }
  const std::size_t pre = memory_state(memory, code, 1);
  if (op == "not_id") {
    std::string out = code;
    out[0] = out[0] == '0' ? '1' : '0';
    return {pre, memory_state(memory, out, 1)};
  }
  if (op == "and_00") return {pre, memory_state(memory, "00", 4)};
  if (op == "reset" || op == "idle") return {pre, pre};
  throw InputError("unknown memory operation '" + op + "'");
}

}  // namespace entropy_adjoint::szilard
