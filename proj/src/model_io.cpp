#include "entropy_adjoint/model_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "entropy_adjoint/errors.hpp"

namespace entropy_adjoint::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational rational_field(const Json& v, const std::string& field) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(field + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw InputError(field + ": expected a rational as \"p/q\" string or an integer");
}

const Json& require(const Json& doc, const char* key, const std::string& context) {
  if (!doc.is_object()) throw InputError(context + ": expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw InputError(fmt::format("{}: missing field \"{}\"", context, key));
  return *it;
}

std::string string_field(const Json& v, const std::string& field) {
  if (!v.is_string()) throw InputError(field + ": expected a string");
  return v.get<std::string>();
}

Json rational_json(const Rational& r) { return to_string(r); }

Json divisor_json(const Rational& r) {
  if (is_integer(r)) return r.numerator();
  return to_string(r);
}

int grid_from(const Json& doc, std::optional<int> grid_override) {
  if (grid_override) return *grid_override;
  if (const auto it = doc.find("grid_n"); it != doc.end()) {
    if (!it->is_number_integer()) throw InputError("grid_n: expected an integer");
    return it->get<int>();
  }
  return default_grid_n();
}

ScalingAction parse_scaling(const Json& v, const std::vector<std::string>& states) {
  if (v.is_string()) {
    const auto kind = v.get<std::string>();
    if (kind == "trivial") return ScalingAction::trivial();
    if (kind == "none") return ScalingAction::none();
    throw InputError("scaling: expected \"trivial\", \"none\" or a table");
  }
  if (!v.is_object()) throw InputError("scaling: expected \"trivial\", \"none\" or a table");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = i;
  ScalingAction::Table table;
  for (const auto& [lambda_text, row] : v.items()) {
    const std::string where = "scaling." + lambda_text;
    const Rational lambda = rational_field(Json(lambda_text), where);
    if (!row.is_object()) throw InputError(where + ": expected an object of state -> state");
    std::vector<std::optional<std::size_t>> entries(states.size());
    for (const auto& [from, to] : row.items()) {
      const auto f = index.find(from);
      if (f == index.end()) throw InputError(where + ": unknown state '" + from + "'");
      const auto t = index.find(string_field(to, where + "." + from));
      if (t == index.end()) throw InputError(where + "." + from + ": unknown state '" + to.get<std::string>() + "'");
      entries[f->second] = t->second;
    }
    table.emplace(lambda, std::move(entries));
  }
  return ScalingAction::table(std::move(table));
}

FiniteEntropySystem parse_finite(const Json& doc) {
  const Json& states_json = require(doc, "states", "model");
  if (!states_json.is_array() || states_json.empty()) throw InputError("states: expected a non-empty array");
  std::vector<std::string> states;
  std::set<std::string> seen;
  for (const auto& s : states_json) {
    auto name = string_field(s, "states");
    if (!seen.insert(name).second) throw InputError("states: duplicate state '" + name + "'");
    states.push_back(std::move(name));
  }
  const Json& entropy_json = require(doc, "entropy", "model");
  if (!entropy_json.is_object()) throw InputError("entropy: expected an object of state -> value");
  for (const auto& [name, _] : entropy_json.items()) {
    if (!seen.count(name)) throw InputError("entropy: unknown state '" + name + "'");
  }
  std::vector<Rational> entropy;
  for (const auto& name : states) {
    const auto it = entropy_json.find(name);
    if (it == entropy_json.end()) throw InputError("entropy: no value for state '" + name + "'");
    entropy.push_back(rational_field(*it, "entropy." + name));
  }
  auto system = FiniteEntropySystem::from_table(states, std::move(entropy));
  if (const auto it = doc.find("scaling"); it != doc.end()) system = system.with_scaling(parse_scaling(*it, states));
  return system;
}

LineSystem parse_line(const Json& doc, std::optional<int> grid_override) {
  const std::string kind = string_field(doc.at("line"), "line");
  LineKind k;
  if (kind == "reals") {
    k = LineKind::reals;
  } else if (kind == "naturals") {
    k = LineKind::naturals;
  } else {
    throw InputError("line: expected \"reals\" or \"naturals\", got '" + kind + "'");
  }
  const std::string entropy = string_field(require(doc, "entropy", "model"), "entropy");
  return numeric_line_system(k, entropy, grid_from(doc, grid_override));
}

const LineSystem& as_line(const EntropySystem& s, const char* role) {
  if (const auto* l = std::get_if<LineSystem>(&s)) return *l;
  throw InputError(fmt::format("{} system must be a numeric line for an \"expr\" map", role));
}

const FiniteEntropySystem& as_finite(const EntropySystem& s, const char* role) {
  if (const auto* f = std::get_if<FiniteEntropySystem>(&s)) return *f;
  throw InputError(fmt::format("{} system must be finite for a \"map\" table", role));
}

LineMap parse_line_map(const Json& node, const LineSystem& source, const LineSystem& target,
                       std::optional<Rational> exponent) {
  if (node.is_array() && !node.empty() && node[0].is_string()) {
    const auto head = node[0].get<std::string>();
    if (head == "right_adjoint" || head == "left_adjoint") {
      if (node.size() != 2) throw InputError("expr: " + head + " takes one argument");
      std::optional<Rational> base_exp;
      if (exponent && *exponent != 0) base_exp = Rational(1) / *exponent;
      const LineMap base = parse_line_map(node[1], target, source, base_exp);
      return LineMap::adjoint_of(base, head == "right_adjoint" ? AdjointSide::right_of : AdjointSide::left_of)
          .with_scaling_exponent(exponent)
          .rebound(source, target);
    }
  }
  return LineMap(source, target, parse_expr(node), exponent);
}

Json line_map_json(const LineMap& map) {
  if (const auto e = map.expression()) return expr_to_json(*e);
  if (const auto* r = map.residual()) {
    return Json::array({r->side == AdjointSide::right_of ? "right_adjoint" : "left_adjoint", line_map_json(r->base)});
  }
  throw InputError("map " + map.describe() + " has no file form");
}

}  // namespace

int default_grid_n() {
  if (const char* env = std::getenv(kGridEnvVar)) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(env, &used);
      if (used == std::char_traits<char>::length(env) && n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw InputError(fmt::format("{}={} is not a positive integer", kGridEnvVar, env));
  }
  return NumericLine::kDefaultGridN;
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(fmt::format("{}:{}:{}: malformed JSON", what, line, col));
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.string());
}

EntropySystem parse_system(const Json& doc, std::optional<int> grid_override) {
  if (!doc.is_object()) throw InputError("model: expected an object");
  if (doc.contains("line")) return parse_line(doc, grid_override);
  return parse_finite(doc);
}

Json system_to_json(const EntropySystem& system) {
  return std::visit(overloaded{
                        [](const FiniteEntropySystem& s) {
                          Json doc;
                          doc["states"] = s.order().elements();
                          Json entropy = Json::object();
                          for (std::size_t i = 0; i < s.size(); ++i) entropy[s.label(i)] = to_string(s.entropy(i));
                          doc["entropy"] = std::move(entropy);
                          if (s.scaling().kind() == ScalingAction::Kind::trivial) doc["scaling"] = "trivial";
                          if (s.scaling().kind() == ScalingAction::Kind::table) {
                            Json table = Json::object();
                            for (const auto& [lambda, row] : s.scaling().entries()) {
                              Json r = Json::object();
                              for (std::size_t i = 0; i < row.size(); ++i) {
                                if (row[i]) r[s.label(i)] = s.label(*row[i]);
                              }
                              table[to_string(lambda)] = std::move(r);
                            }
                            doc["scaling"] = std::move(table);
                          }
                          return doc;
                        },
                        [](const LineSystem& s) {
                          return Json{{"line", to_string(s.line().kind())},
                                      {"entropy", to_string(s.entropy_kind())},
                                      {"grid_n", s.line().grid_n()}};
                        },
                    },
                    system);
}

FiniteOrder parse_order(const Json& doc, std::optional<int> grid_override) {
  if (!doc.is_object()) throw InputError("order: expected an object");
  if (!doc.contains("elements")) {
    return std::visit(overloaded{
                          [](const FiniteEntropySystem& s) { return s.order(); },
                          [](const LineSystem& s) { return materialize(s, s.probes().size()).order(); },
                      },
                      parse_system(doc, grid_override));
  }
  const Json& elems = doc.at("elements");
  if (!elems.is_array() || elems.empty()) throw InputError("elements: expected a non-empty array");
  std::vector<std::string> elements;
  for (const auto& e : elems) elements.push_back(string_field(e, "elements"));
  std::vector<std::pair<std::string, std::string>> pairs;
  if (const auto it = doc.find("pairs"); it != doc.end()) {
    if (!it->is_array()) throw InputError("pairs: expected an array of [a, b]");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto& p = (*it)[i];
      const std::string where = fmt::format("pairs[{}]", i);
      if (!p.is_array() || p.size() != 2) throw InputError(where + ": expected [a, b]");
      pairs.emplace_back(string_field(p[0], where), string_field(p[1], where));
    }
  }
  return FiniteOrder::build(std::move(elements), pairs);
}

LineExpr parse_expr(const Json& node) {
  if (!node.is_array() || node.empty() || !node[0].is_string()) {
    throw InputError("expr: expected [\"name\", args...]");
  }
  const auto head = node[0].get<std::string>();
  auto arity = [&](std::size_t n) {
    if (node.size() != n + 1) throw InputError(fmt::format("expr: {} takes {} argument(s)", head, n));
  };
  if (head == "affine") {
    arity(2);
    return LineExpr::affine(rational_field(node[1], "expr.affine"), rational_field(node[2], "expr.affine"));
  }
  if (head == "identity") {
    arity(0);
    return LineExpr::identity();
  }
  if (head == "floor_div") {
    arity(1);
    return LineExpr::floor_div(rational_field(node[1], "expr.floor_div"));
  }
  if (head == "ceil_div") {
    arity(1);
    return LineExpr::ceil_div(rational_field(node[1], "expr.ceil_div"));
  }
  if (head == "const") {
    arity(1);
    return LineExpr::constant(rational_field(node[1], "expr.const"));
  }
  if (head == "compose") {
    arity(2);
    return LineExpr::compose(parse_expr(node[1]), parse_expr(node[2]));
  }
  throw InputError("expr: unknown form '" + head + "'");
}

Json expr_to_json(const LineExpr& expr) {
  return std::visit(overloaded{
                        [](const LineExpr::Affine& a) {
                          return Json::array({"affine", rational_json(a.slope), rational_json(a.offset)});
                        },
                        [](const LineExpr::FloorDiv& f) { return Json::array({"floor_div", divisor_json(f.divisor)}); },
                        [](const LineExpr::CeilDiv& c) { return Json::array({"ceil_div", divisor_json(c.divisor)}); },
                        [](const LineExpr::Constant& c) { return Json::array({"const", rational_json(c.value)}); },
                        [](const LineExpr::Compose& c) {
                          return Json::array({"compose", expr_to_json(c.outer), expr_to_json(c.inner)});
                        },
                    },
                    expr.node());
}

AnyMap parse_map(const Json& doc, const EntropySystem& source, const EntropySystem& target) {
  if (!doc.is_object()) throw InputError("map file: expected an object");
  std::optional<Rational> exponent;
  if (const auto it = doc.find("scaling_exponent"); it != doc.end()) {
    exponent = rational_field(*it, "scaling_exponent");
    if (*exponent == 0) throw InputError("scaling_exponent: must be nonzero");
  }
  if (const auto it = doc.find("expr"); it != doc.end()) {
    return parse_line_map(*it, as_line(source, "source"), as_line(target, "target"), exponent);
  }
  const Json& table = require(doc, "map", "map file");
  const auto& src = as_finite(source, "source");
  const auto& dst = as_finite(target, "target");
  if (!table.is_object()) throw InputError("map: expected an object of state -> state");
  std::vector<std::optional<std::size_t>> entries(src.size());
  for (const auto& [from, to] : table.items()) {
    const auto& se = src.order().elements();
    if (std::find(se.begin(), se.end(), from) == se.end()) {
      throw InputError("map: unknown source state '" + from + "'");
    }
    const std::string name = string_field(to, "map." + from);
    const auto& de = dst.order().elements();
    if (std::find(de.begin(), de.end(), name) == de.end()) {
      throw InputError("map." + from + ": unknown target state '" + name + "'");
    }
    entries[src.index_of(from)] = dst.index_of(name);
  }
  std::vector<std::size_t> resolved;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i]) throw InputError("map: no image for state '" + src.label(i) + "'");
    resolved.push_back(*entries[i]);
  }
  return FiniteEntropyMap(std::make_shared<const FiniteEntropySystem>(src),
                          std::make_shared<const FiniteEntropySystem>(dst), std::move(resolved), exponent);
}

Json map_to_json(const LineMap& map) {
  Json doc{{"expr", line_map_json(map)}};
  if (map.scaling_exponent()) doc["scaling_exponent"] = to_string(*map.scaling_exponent());
  return doc;
}

Json map_to_json(const FiniteEntropyMap& map) {
  Json table = Json::object();
  for (std::size_t i = 0; i < map.table().size(); ++i) table[map.source().label(i)] = map.target().label(map(i));
  Json doc{{"map", std::move(table)}};
  if (map.scaling_exponent()) doc["scaling_exponent"] = to_string(*map.scaling_exponent());
  return doc;
}

Json map_to_json(const AnyMap& map) {
  return std::visit([](const auto& m) { return map_to_json(m); }, map);
}

std::vector<std::pair<std::string, std::string>> parse_steps(const Json& doc) {
  const Json& steps = require(doc, "steps", "steps file");
  if (!steps.is_array()) throw InputError("steps: expected an array of [pre, post]");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    const std::string where = fmt::format("steps[{}]", i);
    if (!s.is_array() || s.size() != 2) throw InputError(where + ": expected [pre, post]");
    auto text = [&](const Json& v) {
      if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
      return string_field(v, where);
    };
    out.emplace_back(text(s[0]), text(s[1]));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> resolve_steps(
    const FiniteEntropySystem& system, const std::vector<std::pair<std::string, std::string>>& raw) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [a, b] : raw) out.emplace_back(system.index_of(a), system.index_of(b));
  return out;
}

std::vector<std::pair<Rational, Rational>> resolve_steps(const LineSystem& system,
                                                         const std::vector<std::pair<std::string, std::string>>& raw) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& [a, b] : raw) {
    const Rational x = parse_rational(a);
    const Rational y = parse_rational(b);
    if (!system.contains(x) || !system.contains(y)) {
      throw InputError("step " + a + " -> " + b + " leaves " + system.describe());
    }
    out.emplace_back(x, y);
  }
  return out;
}

}  // namespace entropy_adjoint::io
