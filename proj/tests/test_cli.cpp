#include "doctest.h"

#include <sstream>

#include "hspecht/cli.hpp"
#include "hspecht/serialize.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = hspecht::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("index tableau of the (5,3) example") {
  const auto r = run({"tableaux", "--blocks", "5,3", "--diagram", "[3,2]|[2,1]", "--tableau",
                      "[[1,4,6],[2,7]]|[[3,8],[5]]", "--show-index"});
  CHECK(r.status == 0);
  CHECK(r.out.find("i(T) = [[0,2,3],[1,4]]|[[1,4],[2]]") != std::string::npos);
}

TEST_CASE("canonical Specht polynomial") {
  const auto r = run({"specht", "--blocks", "2", "--diagram", "[1,1]", "--canonical"});
  CHECK(r.status == 0);
  CHECK(r.out == "-1/2*x1 + 1/2*x2\n");
  const auto j = run({"specht", "--blocks", "2,1", "--diagram", "[1,1]|[1]", "--tableau", "[[1],[2]]|[[3]]",
                      "--index-tableau", "[[1],[2]]|[[3]]", "--format", "json"});
  CHECK(j.status == 0);
  CHECK(hspecht::Json::parse(j.out).at("text") == "-1/2*x1 + 1/2*x2");
}

TEST_CASE("decompose emits generators and coefficients") {
  const auto r = run({"decompose", "--blocks", "2,1", "--poly", "x1*x3"});
  CHECK(r.status == 0);
  const auto j = hspecht::Json::parse(r.out);
  CHECK(j.contains("generators"));
  CHECK(j.contains("coefficients"));
}

TEST_CASE("apply-op") {
  const auto r = run({"apply-op", "--op", "x1^2*d1 + x2^2*d2", "--poly", "-1/2*x1 + 1/2*x2"});
  CHECK(r.status == 0);
  CHECK(r.out == "-1/2*x1^2 + 1/2*x2^2\n");
}

TEST_CASE("verify on the trivial group") {
  const auto r = run({"verify", "--blocks", "1,1", "--suite", "all"});
  CHECK(r.status == 0);
  CHECK(hspecht::Json::parse(r.out).at("ok") == true);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"tableaux", "--blocks", "3,2", "--kind", "st", "--show-index", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> v{"verify", "--blocks", "2,1", "--suite", "decomposition", "--samples", "5"};
  CHECK(run(v).out == run(v).out);
}

TEST_CASE("usage errors exit with 2 and name the token") {
  auto r = run({"specht", "--blocks", "2", "--tableau", "[[1],[x]]"});
  CHECK(r.status == 2);
  CHECK(r.err.find("x") != std::string::npos);
  r = run({"decompose", "--blocks", "2,y", "--poly", "x1"});
  CHECK(r.status == 2);
  CHECK(r.err.find("'y'") != std::string::npos);
  r = run({"apply-op", "--op", "x1*z1", "--poly", "x1"});
  CHECK(r.status == 2);
  CHECK(r.err.find("z") != std::string::npos);
  CHECK(run({"verify", "--blocks", "4,4"}).status == 2);
  CHECK(run({"verify", "--blocks", "2", "--max-degree", "9"}).status == 2);
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

}
