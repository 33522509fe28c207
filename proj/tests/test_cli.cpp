#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli_app.hpp"

using nlohmann::json;

namespace {
struct RunResult {
  int code;
  std::string out;
  std::string err;
};
RunResult invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tsl_cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("usage errors exit with 2") {
  auto r = invoke({"expsum", "--no-such-flag", "1"});
  CHECK(r.code == 2);
  auto r2 = invoke({});
  CHECK(r2.code == 2);
}

TEST_CASE("seq emits csv") {
  auto r = invoke({"seq", "--N", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,b\n", 0) == 0);
  CHECK(r.out.find("5,1\n") != std::string::npos);
  CHECK(r.out.find("9,0\n") != std::string::npos);

  auto s = invoke({"seq", "--N", "30", "--summary"});
  CHECK(s.out == "N,B\n30,6\n");
}

TEST_CASE("expsum payload schema and values") {
  auto r = invoke({"expsum", "--a", "1", "--q", "4", "--N", "10000"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "tsl-1");
  CHECK(double(j["modulus"]) == doctest::Approx(1074.0).epsilon(1e-9));
  CHECK(double(j["value_im"]) == doctest::Approx(1074.0).epsilon(1e-9));
  CHECK(j.contains("envelope"));
  CHECK(j.contains("pass"));
}

TEST_CASE("identical argv and seed give byte-identical stdout") {
  std::vector<std::string> argv{"identities", "--check", "simple", "--trials", "6",
                                "--seed",     "99",      "--z",     "25"};
  auto a = invoke(argv);
  auto b = invoke(argv);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  auto c = invoke({"ternary", "--N", "9999", "--K", "4", "--b1", "thin:0.5", "--seed", "5"});
  auto d = invoke({"ternary", "--N", "9999", "--K", "4", "--b1", "thin:0.5", "--seed", "5"});
  CHECK(c.out == d.out);
  auto e = invoke({"ternary", "--N", "9999", "--K", "4", "--b1", "thin:0.5", "--seed", "6"});
  CHECK(c.out != e.out);
}

TEST_CASE("identities exit code reflects satisfaction") {
  auto r = invoke({"identities", "--check", "fsi", "--trials", "4", "--seed", "2"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["all_satisfied"] == true);
  for (auto& t : j["trials"]) CHECK(t["residual_is_zero"] == true);
}

TEST_CASE("sieve cache writes through TSL_CACHE_DIR") {
  auto dir = std::filesystem::temp_directory_path() / "tsl_cli_cache_test";
  std::filesystem::create_directories(dir);
  setenv("TSL_CACHE_DIR", dir.c_str(), 1);
  auto r = invoke({"sieve", "--limit", "5000", "--cache"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["prime_count"] == 669);  // pi(5000)
  CHECK(std::filesystem::exists(dir / "spf_5000.bin"));
  // second run loads the cached file
  auto r2 = invoke({"sieve", "--limit", "5000", "--cache"});
  CHECK(json::parse(r2.out)["prime_count"] == 669);
  unsetenv("TSL_CACHE_DIR");
  std::filesystem::remove_all(dir);
}

TEST_CASE("dioph payload") {
  auto r = invoke({"dioph", "--alpha", "sqrt:2", "--lambda", "0.25", "--N", "20000"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["count"] > 0);
  CHECK(double(j["ratio"]) > 0.8);
  CHECK(double(j["ratio"]) < 1.2);
  CHECK(j["approx_within"] == true);
}

TEST_CASE("model payload carries measured and predicted fields") {
  auto r = invoke({"model", "--q", "3", "--a", "1", "--N", "20000", "--K", "6"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  for (const char* k : {"measured_re", "predicted_re", "model_re", "abs_dev_measured",
                        "rel_dev_measured", "prediction_band"})
    CHECK(j.contains(k));
}

TEST_CASE("csv projection of the json payload") {
  auto r = invoke({"kernel", "--T", "100", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("schema,u,v,T,kernel,indicator,deviation\n", 0) == 0);
  CHECK(r.out.find("tsl-1,") != std::string::npos);
}

TEST_CASE("verify-all quick battery passes") {
  auto r = invoke({"verify-all", "--quick"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["all_ok"] == true);
}
