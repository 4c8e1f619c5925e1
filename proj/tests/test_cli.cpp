#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "complab/cli.hpp"
#include "complab/catalog.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace complab;
using Json = nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "complab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kSmallGrid = {"--n-min", "32", "--n-max", "1024", "--trials", "8"};

std::vector<std::string> with_small_grid(std::vector<std::string> args) {
  args.insert(args.end(), kSmallGrid.begin(), kSmallGrid.end());
  return args;
}

}  // namespace

TEST_CASE("run insert worst at n = 4 performs four swaps") {
  const auto r = cli({"run", "insert", "--instance", "worst", "--n", "4"});
  REQUIRE(r.code == kExitVerdict);
  const auto j = r.json();
  CHECK(j["sample"]["metrics"]["swaps"] == 4);
  CHECK(j["instance"]["key"] == 0);
}

TEST_CASE("run min on a random instance makes n-1 comparisons") {
  const auto r = cli({"run", "min", "--instance", "random", "--n", "100", "--seed", "1"});
  REQUIRE(r.code == kExitVerdict);
  CHECK(r.json()["sample"]["counts"]["comparison"] == 99);
  CHECK(r.json()["config"]["seed"] == 1);
}

TEST_CASE("run euclid_gcd worst at n = 21 iterates six times") {
  const auto r = cli({"run", "euclid_gcd", "--instance", "worst", "--n", "21"});
  REQUIRE(r.code == kExitVerdict);
  CHECK(r.json()["sample"]["metrics"]["iterations"] == 6);
  CHECK(r.json()["instance"]["data"] == Json::array({21, 13}));
}

TEST_CASE("usage errors exit with 1") {
  CHECK(cli({"classify", "nosuchalgo"}).code == kExitUsage);
  CHECK_FALSE(cli({"classify", "nosuchalgo"}).err.empty());
  CHECK(cli({"classify", "min", "--n-min", "abc"}).code == kExitUsage);
  CHECK(cli({"classify", "min", "--n-min", "300", "--n-max", "1000"}).code == kExitUsage);
  CHECK(cli({"classify", "min", "--points", "7"}).code == kExitUsage);
  CHECK(cli({"classify", "min", "--tolerance", "1.5"}).code == kExitUsage);
  CHECK(cli({"run", "min", "--instance", "median", "--n", "4"}).code == kExitUsage);
  CHECK(cli({"run", "min", "--n", "1"}).code == kExitUsage);
  CHECK(cli({"search", "euclid_gcd", "--n", "9", "--neighborhood", "random_swap"}).code == kExitUsage);
  CHECK(cli({"average", "min", "--exact", "--n-max", "9"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitVerdict);
}

TEST_CASE("search insert maximize matches the worst witness") {
  const auto r = cli({"search", "insert", "--mode", "max", "--n", "16", "--budget", "500",
                      "--seed", "3"});
  REQUIRE(r.code == kExitVerdict);
  const auto j = r.json();
  CHECK(j["outcome"]["sample"]["metrics"]["iterations"] == 16);
  CHECK(j["outcome"]["evaluations_used"] == 500);
}

TEST_CASE("search min minimize finds the instance-independent cost") {
  const auto r = cli({"search", "min", "--mode", "min", "--n", "32"});
  REQUIRE(r.code == kExitVerdict);
  const double any = total(run(AlgorithmId::min, random_instance(AlgorithmId::min, 32, 77)).counter,
                           CostWeights::all_ones());
  CHECK(r.json()["outcome"]["cost"] == any);
}

TEST_CASE("search quicksort_first_pivot maximize matches the exhaustive maximum") {
  std::vector<Value> p(8);
  std::iota(p.begin(), p.end(), 1);
  double hi = 0;
  do {
    hi = std::max(hi, total(run(AlgorithmId::quicksort_first_pivot,
                                make_instance(AlgorithmId::quicksort_first_pivot, 8, p))
                                .counter,
                            CostWeights::all_ones()));
  } while (std::next_permutation(p.begin(), p.end()));
  const auto r = cli({"search", "quicksort_first_pivot", "--mode", "max", "--n", "8",
                      "--budget", "10000"});
  REQUIRE(r.code == kExitVerdict);
  CHECK(r.json()["outcome"]["cost"] == hi);
}

TEST_CASE("average insert --exact reports n/2 mean iterations") {
  const auto r = cli({"average", "insert", "--n-max", "8", "--exact"});
  REQUIRE(r.code == kExitVerdict);
  const auto j = r.json();
  REQUIRE(j["exact"].size() == 7);
  for (const auto& e : j["exact"])
    CHECK(e["exact_metric_means"]["iterations"].get<double>() ==
          doctest::Approx(e["n"].get<double>() / 2));
}

TEST_CASE("average min and heapsort land in their classes") {
  const auto m = cli({"average", "min", "--trials", "64"});
  REQUIRE(m.code == kExitVerdict);
  CHECK(m.json()["average"]["fit"]["class"] == "n");
  const auto h = cli({"average", "heapsort", "--trials", "64"});
  REQUIRE(h.code == kExitVerdict);
  CHECK(h.json()["average"]["fit"]["class"] == "n_log_n");
}

TEST_CASE("classify insert and min on the default grid") {
  const auto ins = cli({"classify", "insert", "--n-min", "256", "--n-max", "524288", "--seed",
                        "7", "--out", "json"});
  REQUIRE(ins.code == kExitVerdict);
  const auto j = ins.json();
  CHECK(j["verdict"]["homogeneous"] == false);
  CHECK(j["verdict"]["band"]["lower"] == "const");
  CHECK(j["verdict"]["band"]["upper"] == "n");
  CHECK(j["config"]["grid"].size() == 12);

  const auto mn = cli({"classify", "min", "--seed", "7"});
  REQUIRE(mn.code == kExitVerdict);
  CHECK(mn.json()["verdict"]["homogeneous"] == true);
}

TEST_CASE("an inconclusive classification exits with 2") {
  const auto r = cli(with_small_grid({"classify", "quicksort_first_pivot", "--tolerance", "0.001"}));
  CHECK(r.code == kExitInconclusive);
  CHECK(r.json()["verdict"]["status"] == "inconclusive");
  CHECK(r.json()["verdict"]["homogeneous"].is_null());
}

TEST_CASE("identical flags give byte-identical reports") {
  for (const char* alg : {"heapsort", "select_median_of_medians", "euclid_gcd"}) {
    const auto a = cli(with_small_grid({"classify", alg, "--seed", "11"}));
    const auto b = cli(with_small_grid({"classify", alg, "--seed", "11"}));
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  const auto c = cli(with_small_grid({"classify", "heapsort", "--seed", "11", "--out", "csv"}));
  const auto d = cli(with_small_grid({"classify", "heapsort", "--seed", "11", "--out", "csv"}));
  CHECK(c.out == d.out);
  CHECK(c.out.rfind("algorithm,n,instance_kind,trial,seed,", 0) == 0);
}

TEST_CASE("report regenerated from its own config echo is identical") {
  const auto first = cli(with_small_grid({"classify", "merge_sort", "--seed", "5"}));
  const auto cfg = first.json()["config"];
  const auto again = cli({"classify", cfg["algorithm"].get<std::string>(),
                          "--n-min", std::to_string(cfg["n_min"].get<std::uint64_t>()),
                          "--n-max", std::to_string(cfg["n_max"].get<std::uint64_t>()),
                          "--points", std::to_string(cfg["points"].get<std::size_t>()),
                          "--trials", std::to_string(cfg["trials"].get<std::size_t>()),
                          "--tolerance", std::to_string(cfg["tolerance"].get<double>()),
                          "--seed", std::to_string(cfg["seed"].get<std::uint64_t>()),
                          "--weights", cfg["weights"].get<std::string>(),
                          "--search-budget", std::to_string(cfg["search_budget"].get<std::uint64_t>()),
                          "--search-restarts", std::to_string(cfg["search_restarts"].get<std::uint64_t>())});
  CHECK(first.out == again.out);
}

TEST_CASE("the seed environment variable replaces the default seed") {
  ::setenv("COMPLAB_SEED", "424242", 1);
  const auto r = cli({"run", "min", "--n", "10"});
  ::unsetenv("COMPLAB_SEED");
  REQUIRE(r.code == kExitVerdict);
  CHECK(r.json()["config"]["seed"] == 424242);
  // An explicit flag wins over the environment.
  ::setenv("COMPLAB_SEED", "424242", 1);
  const auto s = cli({"run", "min", "--n", "10", "--seed", "3"});
  ::unsetenv("COMPLAB_SEED");
  CHECK(s.json()["config"]["seed"] == 3);
}

TEST_CASE("--output writes the report to a file") {
  const std::string path = "cli_output_test.json";
  const auto r = cli({"run", "min", "--n", "5", "--output", path});
  REQUIRE(r.code == kExitVerdict);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(Json::parse(text.str())["sample"]["counts"]["comparison"] == 4);
  std::remove(path.c_str());
}
