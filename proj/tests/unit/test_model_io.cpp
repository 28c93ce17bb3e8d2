#include <gtest/gtest.h>

#include <cstdlib>

#include "entropy_adjoint/errors.hpp"
#include "entropy_adjoint/model_io.hpp"

using namespace entropy_adjoint;
using io::Json;

TEST(ModelIo, FiniteRoundTrip) {
  const Json doc = Json::parse(R"({"states": ["a", "b"], "entropy": {"a": "1/2", "b": 2},
                                   "scaling": {"2": {"a": "b"}}})");
  const auto sys = io::parse_system(doc);
  const auto& f = std::get<FiniteEntropySystem>(sys);
  EXPECT_EQ(f.entropy(0), Rational(1, 2));
  EXPECT_EQ(f.scale(Rational(2), 0), 1u);
  EXPECT_FALSE(f.scale(Rational(2), 1).has_value());
  EXPECT_EQ(io::parse_system(io::system_to_json(sys)), sys);
}

TEST(ModelIo, LineGridPrecedence) {
  const Json doc = Json::parse(R"({"line": "reals", "entropy": "identity", "grid_n": 7})");
  EXPECT_EQ(std::get<LineSystem>(io::parse_system(doc)).line().grid_n(), 7);
  EXPECT_EQ(std::get<LineSystem>(io::parse_system(doc, 9)).line().grid_n(), 9);
  const Json bare = Json::parse(R"({"line": "naturals", "entropy": "floor"})");
  ::setenv(io::kGridEnvVar, "12", 1);
  EXPECT_EQ(std::get<LineSystem>(io::parse_system(bare)).line().grid_n(), 12);
  EXPECT_EQ(std::get<LineSystem>(io::parse_system(doc)).line().grid_n(), 7);
  ::setenv(io::kGridEnvVar, "twelve", 1);
  EXPECT_THROW(io::parse_system(bare), InputError);
  ::unsetenv(io::kGridEnvVar);
  EXPECT_EQ(std::get<LineSystem>(io::parse_system(bare)).line().grid_n(), 30);
}

TEST(ModelIo, SemanticErrors) {
  for (const char* text : {
           R"({"states": ["a", "a"], "entropy": {"a": 0}})",
           R"({"states": ["a"], "entropy": {"a": 0, "b": 1}})",
           R"({"states": ["a"], "entropy": {}})",
           R"({"states": ["a"], "entropy": {"a": 0.5}})",
           R"({"line": "integers", "entropy": "identity"})",
           R"({"line": "reals", "entropy": "log"})",
       }) {
    EXPECT_THROW(io::parse_system(Json::parse(text)), InputError) << text;
  }
}

TEST(ModelIo, MalformedJsonReportsPosition) {
  try {
    io::parse_json_text("{\n  \"a\": 1,\n  \"b\" 2\n}", "model.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(std::string(e.what()), "model.json:3:7: malformed JSON");
  }
}

TEST(ModelIo, ExprRoundTrip) {
  for (const char* text : {R"(["ceil_div", 3])", R"(["affine", "1/2", "3"])", R"(["const", "2"])",
                           R"(["compose", ["affine", "3", "0"], ["floor_div", 3]])"}) {
    const Json doc = Json::parse(text);
    EXPECT_EQ(io::parse_expr(io::expr_to_json(io::parse_expr(doc))), io::parse_expr(doc)) << text;
  }
  EXPECT_THROW(io::parse_expr(Json::parse(R"(["sqrt", 2])")), InputError);
  EXPECT_THROW(io::parse_expr(Json::parse(R"(["affine", 2])")), InputError);
}

TEST(ModelIo, MapsBetweenKinds) {
  const auto two = io::parse_system(Json::parse(R"({"states": ["a", "b"], "entropy": {"a": 0, "b": 1}})"));
  const auto reals = io::parse_system(Json::parse(R"({"line": "reals", "entropy": "identity"})"));
  const auto naturals = io::parse_system(Json::parse(R"({"line": "naturals", "entropy": "identity"})"));
  EXPECT_THROW(io::parse_map(Json::parse(R"({"map": {"a": "a"}})"), two, two), InputError);
  EXPECT_THROW(io::parse_map(Json::parse(R"({"map": {"a": "a", "b": "z"}})"), two, two), InputError);
  EXPECT_THROW(io::parse_map(Json::parse(R"({"expr": ["identity"]})"), two, two), InputError);
  EXPECT_THROW(io::parse_map(Json::parse(R"({"expr": ["identity"], "scaling_exponent": 0})"), reals, reals),
               InputError);

  const auto residual = io::parse_map(Json::parse(R"({"expr": ["right_adjoint", ["ceil_div", 3]]})"), naturals, reals);
  const auto& g = std::get<LineMap>(residual);
  EXPECT_EQ(g(Rational(2)), 6);
  const Json back = io::map_to_json(residual);
  EXPECT_EQ(back["expr"][0], "right_adjoint");
  const auto again = io::parse_map(back, naturals, reals);
  EXPECT_EQ(std::get<LineMap>(again)(Rational(5)), 15);
}

TEST(ModelIo, Steps) {
  const auto raw = io::parse_steps(Json::parse(R"({"steps": [["1", "6/5"], [2, "2.1"]]})"));
  const auto reals = numeric_line_system(LineKind::reals, "identity");
  const auto steps = io::resolve_steps(reals, raw);
  EXPECT_EQ(steps[0].second, Rational(6, 5));
  EXPECT_EQ(steps[1].first, 2);
  EXPECT_THROW(io::resolve_steps(numeric_line_system(LineKind::naturals, "identity"), raw), InputError);
  EXPECT_THROW(io::parse_steps(Json::parse(R"({"steps": [["1"]]})")), InputError);
}
