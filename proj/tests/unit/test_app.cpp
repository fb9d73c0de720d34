#include <catch_amalgamated.hpp>

#include <filesystem>

#include "ncinv/app.hpp"
#include "ncinv/errors.hpp"

using namespace ncinv;
using app::Json;

namespace {

Json run(const Json& config, unsigned threads = 1) {
  app::Overrides o;
  o.threads = threads;
  return app::run_task(config, o);
}

std::string error_of(const Json& config) {
  try {
    run(config);
  } catch (const UsageError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("report shape", "[app]") {
  auto r = run({{"task", "nu"}, {"params", {{"n", 2}, {"m_max", 5}}}});
  for (const char* key : {"task", "inputs", "results", "conclusive", "verified_up_to", "timings_ms"}) {
    CHECK(r.contains(key));
  }
  CHECK(r["results"]["nu"] == 3);
  CHECK(r["verified_up_to"] == 5);
  CHECK_FALSE(app::strip_timings(r).contains("timings_ms"));
}

TEST_CASE("documented examples", "[app]") {
  auto beta = run(Json::parse(R"({"task": "beta", "variety": "commutative",
      "group": {"kind": "cyclic", "order": 2}, "action": {"kind": "regular"},
      "params": {"proven_bound": 2}})"));
  CHECK(beta["results"]["beta"] == 2);
  CHECK(beta["conclusive"] == true);
  auto id = run(Json::parse(R"({"task": "check-identity", "params": {"identity": "s4", "algebra": "M2"}})"));
  CHECK(id["results"]["holds"] == true);
  auto rk = run(Json::parse(R"({"task": "check-identity", "params": {"identity": "[x1,x2]", "algebra": {"Rk": 2}}})"));
  CHECK(rk["results"]["holds"] == false);
  auto inline_k = run(Json::parse(R"({"task": "check-identity",
      "params": {"identity": "[x1,x2]", "algebra": {"structure_constants": [[["1"]]], "unit": [1]}}})"));
  CHECK(inline_k["results"]["holds"] == true);
}

TEST_CASE("rationals are strings", "[app]") {
  auto r = run(Json::parse(R"({"task": "nu", "params": {"n": 2, "m_max": 4, "certificate": true}})"));
  const auto& terms = r["results"]["certificate"]["terms"];
  REQUIRE(!terms.empty());
  for (const auto& t : terms) CHECK(t["coefficient"].is_string());
  CHECK(r["results"]["certificate"]["verified"] == true);
}

TEST_CASE("group and action encodings", "[app]") {
  auto base = Json::parse(R"({"task": "invariant-basis", "variety": "free", "params": {"degree": 2}})");
  auto with = [&](const char* group, const char* action) {
    Json c = base;
    c["group"] = Json::parse(group);
    c["action"] = Json::parse(action);
    return run(c)["results"]["dimension"].get<int>();
  };
  CHECK(with(R"({"kind": "cyclic", "order": 2})", R"({"kind": "diagonal", "characters": [[1], [0]]})") == 2);
  CHECK(with(R"({"kind": "abelian", "orders": [2, 2], "characters": [[1, 0], [0, 1]]})",
             R"({"kind": "diagonal"})") == 2);
  CHECK(with(R"({"kind": "klein"})", R"({"kind": "regular"})") == 4);
  CHECK(with(R"({"kind": "cyclic", "order": 2})", R"({"kind": "permutation", "images": [2, 1]})") == 2);
  CHECK(with(R"({"kind": "cyclic", "order": 2})", R"({"kind": "permutation", "images": [[1, 2], [2, 1]]})") == 2);
  CHECK(with(R"({"kind": "table", "table": [[0, 1], [1, 0]]})",
             R"({"kind": "matrix", "matrices": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]]})") == 2);
  CHECK(with(R"({"kind": "cyclic", "order": 2})",
             R"({"kind": "matrix", "matrices": [[[1, 0], [0, 1]], [["-1", 0], [0, 1]]]})") == 2);
}

TEST_CASE("errors name the offending field", "[app]") {
  CHECK(error_of({{"task", "frobnicate"}}).find("'task'") != std::string::npos);
  CHECK(error_of({{"task", "nu"}}).find("'params.n'") != std::string::npos);
  CHECK(error_of(Json::parse(R"({"task": "beta", "variety": {"identities": ["x1 x2"]}})"))
            .find("'variety.identities[0]'") != std::string::npos);
  CHECK(error_of(Json::parse(R"({"task": "beta", "variety": "commutative", "group": {"kind": "cyclic"}})"))
            .find("'group.order'") != std::string::npos);
  CHECK(error_of(Json::parse(R"({"task": "beta", "variety": "commutative", "group": {"kind": "cyclic", "order": 2},
      "action": {"kind": "diagonal", "characters": [[1, 1]]}})"))
            .find("'action.characters[0]'") != std::string::npos);
  CHECK(error_of(Json::parse(R"({"task": "beta", "variety": "commutative", "dimension": 3,
      "group": {"kind": "cyclic", "order": 2}, "action": {"kind": "regular"}})"))
            .find("'dimension'") != std::string::npos);
  CHECK(error_of(Json::parse(R"({"task": "verify", "params": {"target": "nothing"}})"))
            .find("'params.target'") != std::string::npos);
  CHECK(error_of(Json::parse(R"({"task": "nu", "params": {"n": 2}, "limits": {"bogus": 1}})"))
            .find("'limits.bogus'") != std::string::npos);
  CHECK(error_of(Json::parse(R"({"task": "beta", "variety": "commutative",
      "group": {"kind": "table", "table": [[0, 1], [1, 1]]}, "action": {"kind": "regular"}})"))
            .find("'group.table'") != std::string::npos);
}

TEST_CASE("exit codes", "[app]") {
  CHECK(app::exit_code(UsageError("x")) == 1);
  CHECK(app::exit_code(ParseError("x", 0)) == 1);
  CHECK(app::exit_code(PreconditionError("x")) == 1);
  CHECK(app::exit_code(ResourceError("x", 3)) == 2);
  CHECK(app::exit_code(InternalError("x")) == 3);
  CHECK(app::exit_code(std::runtime_error("x")) == 3);
  CHECK_THROWS_AS(run(Json::parse(R"({"task": "nu", "params": {"n": 3, "m_max": 6}, "limits": {"nh_max_m": 4}})")),
                  ResourceError);
}

TEST_CASE("thread count does not change reports", "[app][property]") {
  const char* configs[] = {
      R"({"task": "beta", "variety": {"identities": ["[x1,x2]*[x3,x4]"]}, "degree_cap": 5,
          "group": {"kind": "cyclic", "order": 2}, "action": {"kind": "regular"}})",
      R"({"task": "verify", "group": {"kind": "cyclic", "order": 3}, "degree_cap": 6,
          "action": {"kind": "diagonal", "characters": [[1], [2]]}, "params": {"target": "lemma-2-8"}})",
      R"({"task": "identity-shape", "variety": {"identities": ["[x1,x2]*[x3,x4]"]}, "params": {"n_max": 3}})",
  };
  for (const char* text : configs) {
    auto c = Json::parse(text);
    CHECK(app::strip_timings(run(c, 1)) == app::strip_timings(run(c, 3)));
  }
}

TEST_CASE("table rendering", "[app]") {
  auto r = run({{"task", "nu"}, {"params", {{"n", 2}}}});
  auto text = app::render_table(r);
  CHECK(text.find("results.nu") != std::string::npos);
  CHECK(text.find("task") == 0);
}

TEST_CASE("shipped configs run", "[app]") {
  for (const auto& entry : std::filesystem::directory_iterator(NCINV_CONFIG_DIR)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    CHECK_NOTHROW(app::run_task(app::load_config(entry.path().string())));
  }
  CHECK_THROWS_AS(app::load_config("/nonexistent/config.json"), UsageError);
}
