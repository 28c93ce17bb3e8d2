#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "entropy_adjoint/errors.hpp"
#include "entropy_adjoint/galois.hpp"
#include "entropy_adjoint/landauer.hpp"
#include "entropy_adjoint/model_io.hpp"
#include "entropy_adjoint/poset.hpp"
#include "entropy_adjoint/szilard.hpp"

namespace entropy_adjoint::cli {

namespace {

using io::AnyMap;
using io::FiniteEntropyMap;

struct Options {
  std::string source, target, left, right, map, model, steps, output;
  std::string side = "right";
  std::string functor = "left";
  std::string toy_case;
  std::optional<int> grid_n;
  std::string temperature = "300";
  std::string eta = "1";
  std::size_t cycles = 1;
  int memory_bits = 2;
};

EntropySystem load_system(const std::string& path, const Options& o) {
  return io::parse_system(io::read_json_file(path), o.grid_n);
}

AnyMap load_map(const std::string& path, const EntropySystem& src, const EntropySystem& dst) {
  return io::parse_map(io::read_json_file(path), src, dst);
}

// Sends text to --output when given, else to out.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw InputError("cannot write " + o.output);
  file << text;
}

void print_check(std::ostream& out, const CheckResult& c, const std::string& indent = "  ") {
  out << fmt::format("{}{}: {} ({} checked, {} violations)\n", indent, c.name, c.holds ? "holds" : "FAILS", c.checked,
                     c.violations);
  for (const auto& w : c.witnesses) out << indent << "  witness: " << w << "\n";
}

void print_connection(std::ostream& out, const ConnectionReport& r) {
  out << "defining biconditional: " << (r.definition_holds() ? "holds" : "FAILS") << "\n";
  print_check(out, r.definition);
  out << "three-condition characterisation: " << (r.three_condition_holds() ? "holds" : "FAILS") << "\n";
  for (const CheckResult* c : r.three_condition_parts()) print_check(out, *c);
  out << "entropy form: " << (r.entropy_form.holds ? "holds" : "FAILS") << "\n";
  print_check(out, r.entropy_form);
}

// Calls fn(f, g) with both maps of the same kind.
template <class Fn>
int with_maps(const AnyMap& f, const AnyMap& g, Fn&& fn) {
  if (const auto* ff = std::get_if<FiniteEntropyMap>(&f)) {
    if (const auto* gg = std::get_if<FiniteEntropyMap>(&g)) return fn(*ff, *gg);
  }
  if (const auto* ff = std::get_if<LineMap>(&f)) {
    if (const auto* gg = std::get_if<LineMap>(&g)) return fn(*ff, *gg);
  }
  throw InputError("F and G must both be finite tables or both be line expressions");
}

struct Loaded {
  EntropySystem source, target;
  AnyMap f, g;
};

Loaded load_pair(const Options& o) {
  auto src = load_system(o.source, o);
  auto dst = load_system(o.target, o);
  auto f = load_map(o.left, src, dst);
  auto g = load_map(o.right, dst, src);
  return Loaded{std::move(src), std::move(dst), std::move(f), std::move(g)};
}

int cmd_check(const Options& o, std::ostream& out) {
  const Loaded l = load_pair(o);
  return with_maps(l.f, l.g, [&](const auto& f, const auto& g) {
    const auto conn = check_connection(f, g);
    out << "F = " << f.describe() << "\nG = " << g.describe() << "\n";
    print_connection(out, conn.report);
    out << "verdict: " << (conn.verified() ? "F -| G" : "not a Galois connection") << "\n";
    return conn.verified() ? kOk : kPropertyFails;
  });
}

int cmd_synthesize(const Options& o, std::ostream& out) {
  const auto src = load_system(o.source, o);
  const auto dst = load_system(o.target, o);
  const AnyMap m = load_map(o.map, src, dst);
  if (o.side != "right" && o.side != "left") throw InputError("--side must be right or left");
  const AdjointSide side = o.side == "right" ? AdjointSide::right_of : AdjointSide::left_of;
  return std::visit(
      [&](const auto& f) {
        const auto g = synthesize_adjoint(f, side);
        if (!g) {
          out << fmt::format("no {} adjoint exists for {}\n", o.side, f.describe());
          return kPropertyFails;
        }
        const std::string doc = io::map_to_json(*g).dump(2) + "\n";
        if (!o.output.empty()) out << fmt::format("{} adjoint: {}\n", o.side, g->describe());
        emit(o, out, doc);
        return kOk;
      },
      m);
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Loaded l = load_pair(o);
  if (o.functor != "left" && o.functor != "right") throw InputError("--functor must be left or right");
  const FunctorChoice choice = o.functor == "left" ? FunctorChoice::left : FunctorChoice::right;
  const auto raw = io::parse_steps(io::read_json_file(o.steps));
  const EntropySystem& home = choice == FunctorChoice::left ? l.source : l.target;
  return with_maps(l.f, l.g, [&](const auto& f, const auto& g) {
    const auto conn = check_connection(f, g);
    if (!conn.verified()) {
      out << "F and G do not form a Galois connection\n";
      print_connection(out, conn.report);
      return kPropertyFails;
    }
    TransferTable table;
    if constexpr (std::is_same_v<std::decay_t<decltype(f)>, LineMap>) {
      const auto& sys = choice == FunctorChoice::left ? conn.left.source() : conn.right.source();
      table = empirical_table(conn, choice, io::resolve_steps(sys, raw));
    } else {
      table = empirical_table(conn, choice, io::resolve_steps(std::get<FiniteEntropySystem>(home), raw));
    }
    std::ostringstream csv;
    table.write_csv(csv);
    emit(o, out, csv.str());
    out << "matching patterns:";
    const auto ps = match_case_patterns(table);
    if (ps.empty()) out << " none";
    for (const auto p : ps) out << " " << to_string(p);
    out << "\n";
    return kOk;
  });
}

int cmd_closure(const Options& o, std::ostream& out) {
  const Loaded l = load_pair(o);
  return with_maps(l.f, l.g, [&](const auto& f, const auto& g) {
    const auto conn = check_connection(f, g);
    if (!conn.verified()) {
      out << "F and G do not form a Galois connection\n";
      print_connection(out, conn.report);
      return kPropertyFails;
    }
    const auto ops = derive_operators(conn);
    out << "closure K = GF: " << ops.closure.describe() << "\n";
    print_check(out, ops.closure_extensive);
    print_check(out, ops.closure_monotone);
    print_check(out, ops.closure_idempotent);
    out << "interior FG: " << ops.interior.describe() << "\n";
    print_check(out, ops.interior_contractive);
    print_check(out, ops.interior_monotone);
    print_check(out, ops.interior_idempotent);
    return ops.ok() ? kOk : kPropertyFails;
  });
}

int cmd_core(const Options& o, std::ostream& out) {
  const Loaded l = load_pair(o);
  return with_maps(l.f, l.g, [&](const auto& f, const auto& g) {
    const auto conn = check_connection(f, g);
    if (!conn.verified()) {
      out << "F and G do not form a Galois connection\n";
      print_connection(out, conn.report);
      return kPropertyFails;
    }
    const auto cores = extract_cores(conn);
    const auto& C = conn.left.source();
    const auto& D = conn.left.target();
    std::string c1, c2;
    for (const auto& x : cores.core1) c1 += (c1.empty() ? "" : ", ") + C.format(x);
    for (const auto& y : cores.core2) c2 += (c2.empty() ? "" : ", ") + D.format(y);
    out << "core1 = G[D]: {" << c1 << "}\n";
    out << "core2 = F[C]: {" << c2 << "}\n";
    print_check(out, cores.inverse);
    print_check(out, cores.order_iso);
    return cores.ok() ? kOk : kPropertyFails;
  });
}

int cmd_hasse(const Options& o, std::ostream& out) {
  const FiniteOrder order = io::parse_order(io::read_json_file(o.model), o.grid_n);
  const FiniteOrder poset = order.is_poset() ? order : quotient_adiabats(order).poset;
  emit(o, out, to_dot(poset, hasse_edges(poset)));
  return kOk;
}

int cmd_szilard(const Options& o, std::ostream& out) {
  const Rational t = parse_rational(o.temperature);
  const Rational eta = parse_rational(o.eta);
  const auto ledger = szilard::run_engine(t, o.cycles, eta, o.memory_bits);
  std::ostringstream csv;
  szilard::write_ledger_csv(csv, ledger);
  emit(o, out, csv.str());
  const auto audit = szilard::audit_ledger(ledger);
  if (!o.output.empty()) {
    out << fmt::format("cycles: {}\nwork per cycle: {} J\ntotal work: {} J\ntotal heat: {} J\ntotal dS: {} bits\n",
                       o.cycles, szilard::bit_energy(t), ledger.totals.work_J, ledger.totals.heat_J,
                       ledger.totals.dS_total);
    for (const auto* c : {&audit.step_entropy, &audit.cycle_entropy, &audit.work_bound, &audit.totals,
                          &audit.correspondence}) {
      print_check(out, *c, "");
    }
  }
  return audit.ok() ? kOk : kPropertyFails;
}

int cmd_toy(const Options& o, std::ostream& out) {
  bool ok = true;
  out << toy_report(o.toy_case, o.grid_n.value_or(io::default_grid_n()), ok);
  return ok ? kOk : kPropertyFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois connections between entropy systems", "entropy-adjoint"};
  app.require_subcommand(1);
  Options o;
  int grid = 0;
  app.add_option("--grid-n", grid, "probe grid size N for numeric lines")->check(CLI::PositiveNumber);

  auto pair_options = [&](CLI::App* sub) {
    sub->add_option("--source", o.source, "source system model")->required()->check(CLI::ExistingFile);
    sub->add_option("--target", o.target, "target system model")->required()->check(CLI::ExistingFile);
    sub->add_option("--left", o.left, "map F: source -> target")->required()->check(CLI::ExistingFile);
    sub->add_option("--right", o.right, "map G: target -> source")->required()->check(CLI::ExistingFile);
  };

  auto* check = app.add_subcommand("check", "verify F -| G by both criteria");
  pair_options(check);

  auto* synth = app.add_subcommand("synthesize", "construct the adjoint of a map");
  synth->add_option("--source", o.source, "source system model")->required()->check(CLI::ExistingFile);
  synth->add_option("--target", o.target, "target system model")->required()->check(CLI::ExistingFile);
  synth->add_option("--map", o.map, "map: source -> target")->required()->check(CLI::ExistingFile);
  synth->add_option("--side", o.side, "right (map is F) or left (map is G)")->check(CLI::IsMember({"right", "left"}));
  synth->add_option("--output", o.output, "write the adjoint map file here");

  auto* classify = app.add_subcommand("classify", "transfer table of process steps");
  pair_options(classify);
  classify->add_option("--steps", o.steps, "steps file")->required()->check(CLI::ExistingFile);
  classify->add_option("--functor", o.functor, "left (F, steps in source) or right (G, steps in target)")
      ->check(CLI::IsMember({"left", "right"}));
  classify->add_option("--output", o.output, "write the CSV table here");

  auto* closure = app.add_subcommand("closure", "closure GF and interior FG with their laws");
  pair_options(closure);

  auto* core = app.add_subcommand("core", "cores G[D], F[C] and the isomorphism between them");
  pair_options(core);

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of a finite order as DOT");
  hasse->add_option("--model", o.model, "order or finite system model")->required()->check(CLI::ExistingFile);
  hasse->add_option("--output", o.output, "write DOT here");

  auto* szil = app.add_subcommand("szilard", "Szilard engine ledger as CSV");
  szil->add_option("--temperature", o.temperature, "bath temperature in K (rational)");
  szil->add_option("--cycles", o.cycles, "number of cycles");
  szil->add_option("--eta", o.eta, "erasure efficiency, at least 1 (rational)");
  szil->add_option("--memory-bits", o.memory_bits, "demon memory size in bits");
  szil->add_option("--output", o.output, "write the ledger CSV here");

  auto* toy = app.add_subcommand("toy", "reproduce a toy example");
  toy->add_option("case", o.toy_case, "case1, case2 or case3")->required()->check(
      CLI::IsMember({"case1", "case2", "case3"}));

  std::vector<const char*> argv{"entropy-adjoint"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (grid > 0) o.grid_n = grid;

  try {
    if (*check) return cmd_check(o, out);
    if (*synth) return cmd_synthesize(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*closure) return cmd_closure(o, out);
    if (*core) return cmd_core(o, out);
    if (*hasse) return cmd_hasse(o, out);
    if (*szil) return cmd_szilard(o, out);
    if (*toy) return cmd_toy(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace entropy_adjoint::cli
