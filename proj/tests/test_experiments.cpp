#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "modone/experiments.hpp"

using namespace modone;
namespace fs = std::filesystem;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path temp_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("modone_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}
}  // namespace

TEST_CASE("config parsing") {
  const Config cfg = Config::parse_string(
      "experiment = gaps\n# a comment\nalpha=sqrt2\n n = 100 \n\nL=1.5\n");
  REQUIRE(cfg.get_string("experiment", "") == "gaps");
  REQUIRE(cfg.get_double("alpha", 0.0) == Catch::Approx(std::sqrt(2.0)));
  REQUIRE(cfg.get_int("n", 0) == 100);
  REQUIRE(cfg.get_double("L", 0.0) == 1.5);
  REQUIRE(cfg.get_double("missing", 7.0) == 7.0);
  REQUIRE_THROWS_AS(Config::parse_string("experiment gaps\n"), std::invalid_argument);
  REQUIRE_THROWS_AS(Config::parse_string("n = twelve\n").get_int("n", 0),
                    std::invalid_argument);
}

TEST_CASE("repro_maple matches the published outliers") {
  const MapleReproResult res = repro_maple();
  REQUIRE(res.match);
  REQUIRE(res.outliers.size() == 15);
  REQUIRE(res.outliers.front() == Catch::Approx(7.0547245915).margin(1e-6));
  REQUIRE(res.outliers.back() == Catch::Approx(8.4582030656).margin(1e-6));
}

TEST_CASE("repro_maple mismatches on an n override") {
  const MapleReproResult res = repro_maple(4);
  REQUIRE(!res.match);
}

TEST_CASE("unknown experiment is rejected") {
  Config cfg;
  cfg.set("experiment", "frobnicate");
  REQUIRE_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("experiments write csv artifacts with embedded config") {
  const fs::path dir = temp_dir("gaps");
  Config cfg = Config::parse_string("experiment = gaps\ngenerator = iid\nn = 2000\nseed = 5\n");
  cfg.set("out_dir", dir.string());
  const auto files = run_experiment(cfg);
  REQUIRE(files.size() == 1);
  const std::string text = slurp(files[0]);
  REQUIRE(text.find("# experiment = gaps") != std::string::npos);
  REQUIRE(text.find("# seed = 5") != std::string::npos);
  REQUIRE(text.find("bin_lo,bin_hi,mass,reference") != std::string::npos);
}

TEST_CASE("re-running a config reproduces files byte-identically") {
  const fs::path d1 = temp_dir("rerun1");
  const fs::path d2 = temp_dir("rerun2");
  Config cfg = Config::parse_string(
      "experiment = x-model\nM = 500\nL = 1\ntrials = 20000\nseed = 9\n");
  cfg.set("out_dir", d1.string());
  const auto f1 = run_experiment(cfg);
  cfg.set("out_dir", d2.string());
  const auto f2 = run_experiment(cfg);
  REQUIRE(f1.size() == f2.size());
  for (std::size_t i = 0; i < f1.size(); ++i) REQUIRE(slurp(f1[i]) == slurp(f2[i]));
}

TEST_CASE("json output carries config and data") {
  const fs::path dir = temp_dir("json");
  Config cfg = Config::parse_string(
      "experiment = ekl-empirical\nn = 200\nL = 1\ndraws = 500\nseed = 3\nformat = json\n");
  cfg.set("out_dir", dir.string());
  const auto files = run_experiment(cfg);
  const auto j = nlohmann::json::parse(slurp(files[0]));
  REQUIRE(j.contains("config"));
  REQUIRE(j["config"]["experiment"] == "ekl-empirical");
  double total = 0.0;
  for (const auto& row : j["distribution"]) total += row["mass"].get<double>();
  REQUIRE(total == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("scalar csv uses 12 significant digits") {
  REQUIRE(format_sig12(1.0 / 3.0) == "0.333333333333");
  REQUIRE(format_sig12(2.0) == "2");
}

TEST_CASE("fixed-center experiment defaults to x0 = sqrt(3) - 1") {
  const fs::path dir = temp_dir("fixed");
  Config cfg = Config::parse_string(
      "experiment = fixed-center\nn = 200\nL = 1\ndraws = 400\nseed = 8\n");
  cfg.set("out_dir", dir.string());
  const auto files = run_experiment(cfg);
  const std::string text = slurp(files[0]);
  REQUIRE(text.find("# x0_fixed = 0.732050807569") != std::string::npos);
}

TEST_CASE("dioph experiment emits the profile") {
  const fs::path dir = temp_dir("dioph");
  Config cfg = Config::parse_string(
      "experiment = dioph\nalpha = sqrt2\nq_max = 5000\nbeta = 0.5\nn = 20000\nformat = json\n");
  cfg.set("out_dir", dir.string());
  const auto files = run_experiment(cfg);
  const auto j = nlohmann::json::parse(slurp(files[0]));
  REQUIRE(j["profile"]["kappa"].get<double>() == 2.0);
  REQUIRE(j["profile"]["partial_quotients"][1].get<int>() == 2);
}
