#include "catch_amalgamated.hpp"

#include "spanlab/copyfamily.hpp"
#include "spanlab/io.hpp"
#include "spanlab/structures.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

using namespace spanlab;

TEST_CASE("graph json round trip") {
  for (const auto& spec : {StructureSpec::c4_cycle(8), StructureSpec::krs_cycle(5, 2, 9)}) {
    const auto g = build_structure(spec);
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
  CHECK(graph_to_json(LabeledGraph(3, {{1, 2}, {0, 1}})) == R"({"n":3,"edges":[[0,1],[1,2]]})");
}

TEST_CASE("graph json rejects malformed input") {
  CHECK_THROWS_AS(graph_from_json("not json"), std::runtime_error);
  CHECK_THROWS_AS(graph_from_json(R"({"n":3})"), std::runtime_error);
  CHECK_THROWS_AS(graph_from_json(R"({"n":3,"edges":[[0,3]]})"), std::runtime_error);
  CHECK_THROWS_AS(graph_from_json(R"({"n":3,"edges":[[0,0]]})"), std::runtime_error);
  CHECK_THROWS_AS(graph_from_json(R"({"n":3,"edges":[[0,1]],"extra":1})"), std::runtime_error);
  CHECK_THROWS_AS(graph_from_json(R"({"n":3,"edges":[[0,1,2]]})"), std::runtime_error);
}

TEST_CASE("threshold csv layout") {
  ThresholdEstimate est;
  est.spec = StructureSpec::c4_cycle(8);
  est.points = {{0.5, 10, 3, 1, 1.0 / 3}};
  std::ostringstream out;
  write_threshold_csv(out, est, {{"seed", "4"}});
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "# seed=4");
  std::getline(in, line);
  CHECK(line == "p,trials,contains,unknown,freq");
  std::getline(in, line);
  CHECK(line.rfind("0.5,10,3,1,0.333", 0) == 0);

  const auto j = nlohmann::json::parse(threshold_summary_json(est, {{"seed", "4"}}));
  CHECK(j["config"]["seed"] == "4");
  CHECK(j["p_half"].is_null());
  CHECK(threshold_svg({est}).find("<svg") == 0);
}

TEST_CASE("pipeline transcript is json lines") {
  PipelineResult r;
  r.rounds = {{1, 10, 5, 28, 28, true}, {2, 8, 2, 28, 28, true}};
  r.t = 2;
  r.success = true;
  r.found_copy = EdgeSet::from_indices(28, std::vector<std::uint32_t>{1, 2});
  std::ostringstream out;
  write_pipeline_transcript(out, r, {{"seed", "9"}});
  std::istringstream in(out.str());
  std::vector<nlohmann::json> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(nlohmann::json::parse(line));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0]["config"]["seed"] == "9");
  CHECK(lines[1]["round"] == 1);
  CHECK(lines[3]["result"]["success"] == true);
  CHECK(lines[3]["result"]["found_copy"] == nlohmann::json::array({1, 2}));
}
