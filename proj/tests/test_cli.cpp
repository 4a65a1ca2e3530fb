#include <doctest.h>

#include <sstream>

#include "braid3/cli.hpp"

using braid3::run_cli;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: conjugate") {
  const auto yes = run({"conjugate", "s1^3 s2^4 s1^5 s2^-1", "s1^3 s2^6 s1^3 s2^-1"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "conjugate: true\n");

  const auto no = run({"conjugate", "s1^5 s2^2 s1^3 s2^-1", "s1^5 s2^-1 s1^3 s2^2"});
  CHECK(no.code == 1);
  CHECK(no.out == "conjugate: false\n");

  const auto js = run({"conjugate", "1 2 1", "2 1 2", "--format", "json"});
  CHECK(js.code == 0);
  CHECK(js.out.find("\"conjugate\": true") != std::string::npos);
}

TEST_CASE("cli: normalize") {
  const auto r = run({"normalize", "s1^-1", "--strands", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "D^-1 . [3 1 2]\n");
  const auto delta = run({"normalize", "1 2 1"});
  CHECK(delta.out == "D^1\n");
}

TEST_CASE("cli: classify") {
  const auto torus = run({"classify", "s1^5 s2^1"});
  CHECK(torus.code == 0);
  CHECK(torus.out.find("below-index-3") != std::string::npos);
  CHECK(torus.out.find("torus link of type (2,5)") != std::string::npos);

  const auto pair = run({"classify", "s1^3 s2^-2 s1^2 s2^-1"});
  CHECK(pair.code == 0);
  CHECK(pair.out.find("flype-pair") != std::string::npos);
  CHECK(pair.out.find("transversally-nonsimple: true") != std::string::npos);
}

TEST_CASE("cli: invariants") {
  const auto r = run({"invariants", "s1^3 s2^1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("components: 1") != std::string::npos);
  CHECK(r.out.find("jones: q^2 + q^6 - q^8") != std::string::npos);
  CHECK(r.out.find("alexander: 1 - t + t^2") != std::string::npos);
  CHECK(r.out.find("determinant: 3") != std::string::npos);
}

TEST_CASE("cli: atlas csv has 20 data rows") {
  const auto r = run({"atlas", "--max-crossings", "12", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 21);
  const auto again = run({"atlas", "--max-crossings", "12", "--format", "csv"});
  CHECK(again.out == r.out);  // byte-identical repeat invocation
}

TEST_CASE("cli: verify-table1 passes") {
  const auto r = run({"verify-table1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS* 12n234") != std::string::npos);
  CHECK(r.out.find("20/20 rows matched (1 flagged, 0 failed)") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"conjugate", "1 1"}).code == 2);         // missing second word
  CHECK(run({"normalize", "s1^0"}).code == 2);        // malformed word
  CHECK(run({"atlas", "--format", "yaml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
