#include <sstream>

#include <fmt/format.h>

#include "commands.hpp"
#include "entropy_adjoint/errors.hpp"
#include "entropy_adjoint/galois.hpp"
#include "entropy_adjoint/landauer.hpp"

namespace entropy_adjoint::cli {

namespace {

struct Expected {
  Rational pre, post;
  StepClass source, target;
};

std::string pattern_list(const std::vector<CasePattern>& ps) {
  if (ps.empty()) return "none";
  std::string s;
  for (const auto p : ps) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

std::string occupancy_list(const TransferTable& t) {
  std::string s;
  for (const auto& [a, b] : t.occupancy()) s += (s.empty() ? "" : ", ") + to_string(a) + "->" + to_string(b);
  return s.empty() ? "empty" : s;
}

// Shared body: verify the connection, replay the named steps through the
// chosen functor, then sweep every grid step.
template <class MF, class MG>
void replay(std::ostream& out, bool& ok, const Connection<MF, MG>& conn, FunctorChoice choice,
            const std::vector<Expected>& steps) {
  const auto& r = conn.report;
  out << fmt::format("definition check: {} ({} pairs)\n", r.definition.holds ? "holds" : "FAILS", r.definition.checked);
  out << fmt::format("three-condition check: {}\n", r.three_condition_holds() ? "holds" : "FAILS");
  ok = ok && conn.verified();

  const LineMap& f = choice == FunctorChoice::left ? conn.left : conn.right;
  const char* name = choice == FunctorChoice::left ? "F" : "G";
  out << fmt::format("steps under {}:\n", name);
  for (const auto& e : steps) {
    const auto step = make_step(f.source(), e.pre, e.post);
    const auto moved = transfer_step(f, step);
    const StepClass a = classify_step(step);
    const StepClass b = classify_step(moved);
    const bool match = a == e.source && b == e.target;
    ok = ok && match;
    out << fmt::format("  {} -> {}: {}; {}: {} -> {}: {}{}\n", to_display(e.pre), to_display(e.post), to_string(a),
                       name, to_display(moved.pre), to_display(moved.post), to_string(b),
                       match ? "" : "  (unexpected)");
  }

  const auto all = all_probe_steps(f.source());
  const TransferTable sweep = tabulate_transfers(f, all);
  out << fmt::format("grid sweep under {} ({} steps):\n", name, sweep.total());
  out << fmt::format("  reversible -> reversible: {}\n",
                     sweep.count(StepClass::reversible, StepClass::reversible));
  out << fmt::format("  reversible -> irreversible: {}\n",
                     sweep.count(StepClass::reversible, StepClass::irreversible_increasing));
  out << fmt::format("  irreversible -> reversible: {}\n",
                     sweep.count(StepClass::irreversible_increasing, StepClass::reversible));
  out << fmt::format("  irreversible -> irreversible: {}\n",
                     sweep.count(StepClass::irreversible_increasing, StepClass::irreversible_increasing));
  out << fmt::format("  involving decreasing steps: {}\n", sweep.decreasing());

  std::vector<std::pair<Rational, Rational>> named;
  for (const auto& e : steps) named.emplace_back(e.pre, e.post);
  const TransferTable table = empirical_table(conn, choice, named);
  out << "occupancy of the named steps: " << occupancy_list(table) << "\n";
  out << "matching patterns: " << pattern_list(match_case_patterns(table)) << "\n";
  out << "matching patterns (grid sweep): " << pattern_list(match_case_patterns(sweep)) << "\n";
}

}  // namespace

std::string toy_report(const std::string& which, int grid_n, bool& ok) {
  ok = true;
  std::ostringstream out;
  const LineSystem reals = numeric_line_system(LineKind::reals, "identity", grid_n);
  const LineSystem naturals = numeric_line_system(LineKind::naturals, "identity", grid_n);
  const auto irr = StepClass::irreversible_increasing;
  const auto rev = StepClass::reversible;
  const Rational r2(2);

  if (which == "case1") {
    const LineMap f(reals, naturals, LineExpr::ceil_div(3));
    const LineMap g(naturals, reals, LineExpr::affine(3, 0));
    const auto conn = check_connection(f, g);
    out << "toy case1\n";
    out << fmt::format("F(x) = {} : {} -> {}\n", f.describe(), reals.describe(), naturals.describe());
    out << fmt::format("G(x) = {} : {} -> {}\n", g.describe(), naturals.describe(), reals.describe());
    out << fmt::format("grid: N = {}, reals resolution {}\n", grid_n, conn.left.source().line().resolution());
    replay(out, ok, conn, FunctorChoice::left,
           {{Rational(1), Rational(6, 5), irr, rev}, {Rational(29, 10), Rational(31, 10), irr, irr}, {r2, r2, rev, rev}});
    const TransferTable sweep = tabulate_transfers(conn.left, all_probe_steps(conn.left.source()));
    const bool none_rev_to_irr = sweep.count(rev, irr) == 0;
    ok = ok && none_rev_to_irr;
    out << fmt::format("no reversible step becomes irreversible under F: {}\n", none_rev_to_irr ? "yes" : "no");
  } else if (which == "case2") {
    const LineMap f(naturals, reals, LineExpr::affine(3, 0));
    const LineMap g(reals, naturals, LineExpr::floor_div(3));
    const auto conn = check_connection(f, g);
    out << "toy case2\n";
    out << fmt::format("F(x) = {} : {} -> {}\n", f.describe(), naturals.describe(), reals.describe());
    out << fmt::format("G(x) = {} : {} -> {}\n", g.describe(), reals.describe(), naturals.describe());
    out << fmt::format("grid: N = {}, reals resolution {}\n", grid_n, conn.right.source().line().resolution());
    replay(out, ok, conn, FunctorChoice::right,
           {{Rational(6), Rational(9), irr, irr}, {r2, Rational(21, 10), irr, rev}, {r2, r2, rev, rev}});
  } else if (which == "case3") {
    const LineMap id = identity_map(reals);
    const auto conn = check_connection(id, id);
    out << "toy case3\n";
    out << fmt::format("F = G = {} on {}\n", id.describe(), reals.describe());
    out << fmt::format("grid: N = {}, reals resolution {}\n", grid_n, conn.left.source().line().resolution());
    replay(out, ok, conn, FunctorChoice::left,
           {{Rational(1), Rational(6, 5), irr, irr}, {Rational(29, 10), Rational(31, 10), irr, irr}, {r2, r2, rev, rev}});
    const auto strength = classify_map_strength(id, id);
    out << fmt::format("F order-isomorphism: {}\n", strength.order_isomorphism.holds ? "yes" : "no");
    ok = ok && strength.order_isomorphism.holds;
  } else {
    throw InputError("toy expects case1, case2 or case3, got '" + which + "'");
  }
  out << "result: " << (ok ? "reproduced" : "NOT reproduced") << "\n";
  return out.str();
}

}  // namespace entropy_adjoint::cli
