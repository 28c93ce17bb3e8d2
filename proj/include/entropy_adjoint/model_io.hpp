#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "entropy_adjoint/entropy_system.hpp"
#include "entropy_adjoint/finite_map.hpp"
#include "entropy_adjoint/line_map.hpp"
#include "entropy_adjoint/poset.hpp"

namespace entropy_adjoint::io {

using Json = nlohmann::json;

using FiniteEntropyMap = FiniteMap<FiniteEntropySystem, FiniteEntropySystem>;
using AnyMap = std::variant<FiniteEntropyMap, LineMap>;

inline constexpr const char* kGridEnvVar = "ENTROPY_ADJOINT_GRID_N";

// Grid density when a line model does not set one: the environment variable
// if present and valid, else the built-in default.
int default_grid_n();

// Parses a file; syntax errors report line and column. `what` names the file
// in messages.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text, const std::string& what);

// {"states": [...], "entropy": {...}, "scaling": ...} or
// {"line": "reals", "entropy": "identity", "grid_n": 30}.
// grid_override, when set, wins over the file and the environment.
EntropySystem parse_system(const Json& doc, std::optional<int> grid_override = std::nullopt);
Json system_to_json(const EntropySystem& system);

// {"elements": [...], "pairs": [[a, b], ...]}; entropy models are accepted too
// and yield their induced order.
FiniteOrder parse_order(const Json& doc, std::optional<int> grid_override = std::nullopt);

LineExpr parse_expr(const Json& node);
Json expr_to_json(const LineExpr& expr);

// {"map": {...}} between finite systems or {"expr": ...} between lines, with
// an optional "scaling_exponent".
AnyMap parse_map(const Json& doc, const EntropySystem& source, const EntropySystem& target);
Json map_to_json(const AnyMap& map);
Json map_to_json(const LineMap& map);
Json map_to_json(const FiniteEntropyMap& map);

// {"steps": [["1", "6/5"], ...]} as raw labels, resolved against a system.
std::vector<std::pair<std::string, std::string>> parse_steps(const Json& doc);
std::vector<std::pair<std::size_t, std::size_t>> resolve_steps(
    const FiniteEntropySystem& system, const std::vector<std::pair<std::string, std::string>>& raw);
std::vector<std::pair<Rational, Rational>> resolve_steps(const LineSystem& system,
                                                         const std::vector<std::pair<std::string, std::string>>& raw);

}  // namespace entropy_adjoint::io
