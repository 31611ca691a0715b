#include <doctest.h>

#include "liegrade/cli/commands.hpp"

using namespace liegrade;
using namespace liegrade::cli;

namespace {

Report run_json(const char* text) { return run(parse_config(Json::parse(text))); }

std::string error_of(const char* text) {
  try {
    parse_config(Json::parse(text));
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("integer lists") {
  CHECK(parse_int_list("1,0,-1") == std::vector<int>{1, 0, -1});
  CHECK(parse_int_list(" 2, 3 ") == std::vector<int>{2, 3});
  CHECK_THROWS_AS(parse_int_list("1,,2"), InvalidInput);
  CHECK_THROWS_AS(parse_int_list("1,x"), InvalidInput);
  CHECK_THROWS_AS(parse_int_list(""), InvalidInput);
}

TEST_CASE("config validation") {
  const JobConfig c = parse_config(Json::parse(R"({"command": "grading", "lie_type": "A2", "labels": [1, 1]})"));
  CHECK(c.lie_type->name() == "A2");
  CHECK(c.labels == std::vector<int>{1, 1});
  CHECK(c.seed == 0);
  CHECK(c.output_format == Format::json);

  CHECK(error_of(R"({"command": "nope"})").find("nope") != std::string::npos);
  CHECK(error_of(R"({"lie_type": "A2"})").find("command") != std::string::npos);
  CHECK(error_of(R"({"command": "grading", "lie_type": "A2"})").find("labels") != std::string::npos);
  CHECK(error_of(R"({"command": "grading", "lie_type": "A2", "labels": [1, 1], "genus": 2})").find("genus") !=
        std::string::npos);
  CHECK(error_of(R"({"command": "toledo", "dims": [1, 1], "degrees": [1, -1], "genus": 2.5})") != "");
  CHECK(error_of(R"({"command": "grading", "lie_type": "Q2", "labels": [1]})") != "");
  CHECK(error_of(R"({"command": "grading", "lie_type": "A2", "labels": [1, 1], "output_format": "xml"})") != "");
  CHECK(error_of(R"({"command": "amw", "genus": 2, "lambda": 0.5, "rank_plus": 1, "zeta_pairing": 1})") != "");
}

TEST_CASE("rationals are integers or p/q strings") {
  const JobConfig c = parse_config(Json::parse(
      R"({"command": "amw", "genus": 2, "lambda": "1/2", "rank_plus": 4, "rank_minus": "1", "zeta_pairing": "4", "depth": 2})"));
  CHECK(*c.lambda == ratio(1, 2));
  CHECK(*c.rank_minus == 1);
  const Report r = run(c);
  CHECK(r.results["lower_bound"] == "-8");
  CHECK(r.results["upper_bound"] == "7/2");
}

TEST_CASE("merged configs: the override wins") {
  const Json base = Json::parse(R"({"command": "quaternionic", "lie_type": "A2", "seed": 3})");
  const Json merged = merge_config(base, Json::parse(R"({"lie_type": "G2"})"));
  CHECK(merged["lie_type"] == "G2");
  CHECK(merged["seed"] == 3);
  CHECK(parse_config(merged).lie_type->name() == "G2");
}

TEST_CASE("command results") {
  const Report q = run_json(R"({"command": "quaternionic", "lie_type": "A2"})");
  CHECK(q.passed());
  CHECK(q.results["piece_dims"] == Json::parse("[1, 2, 2, 2, 1]"));
  CHECK(q.results["kappa"] == 2);
  CHECK(q.results["rank_plus"] == "4");
  CHECK(q.results["rank_minus"] == "1");

  const Report t = run_json(R"({"command": "toledo", "dims": [1, 1, 1], "degrees": [1, 0, -1], "genus": 2})");
  CHECK(t.results["tau"] == "-4");
  const Report t2 = run_json(R"({"command": "toledo", "dims": [2, 1], "degrees": [1, -1], "genus": 2})");
  CHECK(t2.results["tau"] == "-2");

  CHECK(run_json(R"({"command": "amw", "quaternionic": true, "coarse": true, "kappa": 1, "genus": 2})")
            .results["bounds"] == Json::parse(R"(["-2", "2"])"));
  CHECK(run_json(R"({"command": "amw", "quaternionic": true, "coarse": true, "kappa": 2, "genus": 2})")
            .results["bounds"] == Json::parse(R"(["-8", "4"])"));

  const Report k = run_json(R"({"command": "kac", "lie_type": "G2", "kac_labels": [0, 1, 0]})");
  CHECK(k.results["lift"]["verdict"] == "no lift");
  const Report ka = run_json(R"({"command": "kac", "lie_type": "A2", "kac_labels": [0, 1, 2]})");
  CHECK(ka.results["lift"]["verdict"] == "lifts after diagram automorphism");

  const Report c = run_json(R"({"command": "cayley", "dims": [2, 2, 2]})");
  CHECK(c.passed());
  CHECK(c.results["dim_c"] == 3);
  CHECK(c.results["dim_V"] == 4);
  CHECK(c.results["theta_pair_candidate"] == false);

  const Report g = run_json(R"({"command": "quiver", "dims": [1, 1, 1]})");
  CHECK(g.passed());
  CHECK(g.results["jm_regular"] == true);
  CHECK(g.results["orbits"].size() == 4);

  CHECK_THROWS_AS(run_json(R"({"command": "cayley", "dims": [2, 1]})"), PreconditionFailed);
  CHECK_THROWS_AS(run_json(R"({"command": "grading", "lie_type": "A2", "labels": [1]})"), InvalidInput);
}

TEST_CASE("reports are reproducible byte for byte") {
  const char* job = R"({"command": "grading", "lie_type": "G2", "labels": [0, 1], "seed": 5})";
  const std::string a = run_json(job).to_json().dump(2), b = run_json(job).to_json().dump(2);
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["schema_version"] == schema_version);
  CHECK(j["inputs"]["seed"] == 5);
  CHECK(run_json(job).to_text() == run_json(job).to_text());
}

TEST_CASE("reference value suite") {
  const Report r = verify_paper(0);
  CHECK(r.passed());
  CHECK(r.checks.size() >= 60);
  for (std::size_t i = 1; i < r.checks.size(); ++i) CHECK(r.checks[i - 1].id < r.checks[i].id);
  for (const auto& c : r.checks) CHECK_FALSE(c.paper_ref.empty());
}
