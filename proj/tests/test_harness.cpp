#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "semistream/errors.hpp"
#include "semistream/harness.hpp"

using namespace semistream;
using nlohmann::json;

namespace {

ExperimentSpec small_spec(int count, int reps) {
  json doc = {
      {"schema", 1},
      {"instances",
       {{{"generator", {{"kind", "random"}, {"n", 8}, {"m", 6}, {"p", 0.5}, {"seed", 42},
                        {"count", count}, {"patch_isolated", true}}}}}},
      {"algorithms", {{{"name", "onepass"}, {"eps", 0.0}}}},
      {"orders",
       {{{"policy", "as-given"}},
        {{"policy", "random"}, {"seed", 7}},
        {{"policy", "adversarial"}}}},
      {"repetitions", reps},
  };
  return parse_experiment_spec(doc);
}

}  // namespace

TEST_CASE("spec validation errors carry field paths") {
  CHECK_THROWS_WITH_AS(parse_experiment_spec(json::object()),
                       "instances: must be a non-empty array", ArgumentError);

  json bad_algo = {{"instances", {{{"file", "x.graph"}}}},
                   {"algorithms", {{{"name", "warp"}}}}};
  CHECK_THROWS_WITH_AS(parse_experiment_spec(bad_algo),
                       "algorithms[0].name: unknown algorithm 'warp'", ArgumentError);

  json bad_gen = {{"instances", {{{"generator", {{"kind", "random"}, {"m", 3}}}}}},
                  {"algorithms", {{{"name", "optimal"}}}}};
  CHECK_THROWS_WITH_AS(parse_experiment_spec(bad_gen),
                       "instances[0].generator.n: missing required field", ArgumentError);

  json bad_policy = {{"instances", {{{"file", "x.graph"}}}},
                     {"algorithms", {{{"name", "optimal"}}}},
                     {"orders", {{{"policy", "sideways"}}}}};
  CHECK_THROWS_AS(parse_experiment_spec(bad_policy), ArgumentError);
}

TEST_CASE("missing instance files are reported with their path") {
  json doc = {{"instances", {{{"file", "no/such/file.graph"}}}},
              {"algorithms", {{{"name", "optimal"}}}}};
  ExperimentSpec spec = parse_experiment_spec(doc);
  try {
    run_experiment(spec);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("no/such/file.graph") != std::string::npos);
  }
}

TEST_CASE("instances x algorithms x orders yields one record each, bounds all good") {
  ExperimentSpec spec = small_spec(10, 1);
  std::vector<ResultRecord> records = run_experiment(spec);
  REQUIRE(records.size() == 30);  // 10 instances x 1 algorithm x 3 orders
  for (const ResultRecord& r : records) {
    CHECK(r.n == 8);
    CHECK(r.complete);
    CHECK(r.d_star >= 1);  // n=8 is within the exact guard
    CHECK(r.bound_known);
    CHECK(r.bound_ok);
    CHECK(r.ratio >= 1.0 - 1e-12);
    CHECK(r.passes == 1);
  }
  CHECK(all_bounds_ok(records));
}

TEST_CASE("zero repetitions yield an empty record list") {
  CHECK(run_experiment(small_spec(3, 0)).empty());
}

TEST_CASE("emit: csv skeleton") {
  std::string csv = emit({}, OutputFormat::Csv);
  CHECK(csv ==
        "schema,instance,algorithm,order,rep,n,m,edges,degmax,size,complete,d_star,ratio,bound,"
        "bound_ok,peak_edges,passes\n");
  CHECK_THROWS_AS(parse_output_format("yaml"), ArgumentError);
}

TEST_CASE("emit: json lines round-trip and determinism") {
  ExperimentSpec spec = small_spec(2, 1);
  std::vector<ResultRecord> records = run_experiment(spec);
  std::string doc = emit(records, OutputFormat::JsonLines);

  // identical runs give byte-identical documents
  CHECK(doc == emit(run_experiment(spec), OutputFormat::JsonLines));

  // each line parses back to the record
  std::istringstream lines(doc);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    json parsed = json::parse(line);
    REQUIRE(i < records.size());
    CHECK(parsed["schema"] == records[i].schema);
    CHECK(parsed["instance"] == records[i].instance);
    CHECK(parsed["degmax"] == records[i].degmax);
    CHECK(parsed["d_star"] == records[i].d_star);
    CHECK(parsed["bound_ok"] == records[i].bound_ok);
    CHECK(parsed["peak_edges"] == records[i].peak_edges);
    ++i;
  }
  CHECK(i == records.size());

  // timing is excluded unless requested
  CHECK(doc.find("wall_ms") == std::string::npos);
  std::string timed = emit(records, OutputFormat::JsonLines, true);
  CHECK(timed.find("wall_ms") != std::string::npos);
}

TEST_CASE("every algorithm name runs end to end") {
  json doc = {
      {"instances",
       {{{"generator", {{"kind", "random"}, {"n", 6}, {"m", 4}, {"p", 0.6}, {"seed", 3},
                        {"count", 2}, {"patch_isolated", true}}}}}},
      {"algorithms",
       {{{"name", "onepass"}, {"eps", 0.5}},
        {{"name", "multipass"}},
        {{"name", "greedy"}},
        {{"name", "optimal"}},
        {{"name", "semi2"}},
        {{"name", "incomplete"}, {"s", 12}, {"d", 2}},
        {{"name", "asemi"}, {"s", 12}, {"d", 2}, {"p", 3}}}},
      {"orders", {{{"policy", "random"}, {"seed", 1}}}},
      {"repetitions", 2},
  };
  std::vector<ResultRecord> records = run_experiment(parse_experiment_spec(doc));
  CHECK(records.size() == 2 * 7 * 1 * 2);
  CHECK(all_bounds_ok(records));
  for (const ResultRecord& r : records) {
    if (r.algorithm.rfind("greedy", 0) == 0) {
      CHECK(r.order.rfind("vertex-arrival", 0) == 0);  // greedy forces arrival order
    }
  }
}
