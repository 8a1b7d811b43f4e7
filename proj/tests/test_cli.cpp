#include <doctest.h>

#include <sstream>

#include "liftforge/cli.hpp"
#include "liftforge/landscape.hpp"

using namespace liftforge;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rule arguments") {
  const Rule patt = compile(parse_landscape("0*10"));
  CHECK(parse_rule_arg("(0★10)") == patt);
  CHECK(parse_rule_arg(to_hex(patt)) == patt);
  CHECK(parse_rule_arg("x2 ^ (x1^1)*x3*(x4^1)") == patt);
  CHECK(parse_range("4..12") == std::pair{4, 12});
  CHECK(parse_range("7") == std::pair{7, 7});
  CHECK_THROWS(parse_range("12..4"));
  CHECK_THROWS(parse_range("a..b"));
}

TEST_CASE("verify") {
  const Run p = run({"verify", "(0★10)", "--exact"});
  CHECK(p.code == kExitOk);
  CHECK(p.out.rfind("proper", 0) == 0);
  const Run x = run({"verify", "x1 ^ x2"});
  CHECK(x.code == kExitMismatch);
  CHECK(x.out.rfind("not proper", 0) == 0);
  const Run j = run({"--format", "json", "verify", "(0*10)"});
  CHECK(j.code == kExitOk);
  CHECK(j.out.find("\"decision\":\"proper\"") != std::string::npos);
}

TEST_CASE("landscapes and du") {
  const Run l = run({"landscapes", "--k", "6", "--classes"});
  CHECK(l.code == kExitOk);
  CHECK(l.out.find("count=72 classes=18") != std::string::npos);
  const Run d = run({"du", "(0*10)", "--n", "4..12", "--scaled"});
  CHECK(d.code == kExitOk);
  CHECK(d.out.find("192 224 240 216 216 216 216 216 216") != std::string::npos);
}

TEST_CASE("families and compose") {
  const Run s = run({"families", "symmetric", "--k", "4", "--j", "2", "--set", "1,4"});
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("x2 ^ x1*x4 ^ x1*x3*x4") != std::string::npos);
  const Run bad = run({"families", "symmetric", "--k", "6", "--j", "2", "--set", "1,6"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("no-congruent-t") != std::string::npos);
  const Run c = run({"compose", "(1*001)", "(1*01)"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("k=5") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"du", "(0*10)", "--n", "12..4"}).code == kExitUsage);
  CHECK(run({"verify", "(0*10"}).code == kExitUsage);
  CHECK(run({"landscapes", "--k", "14"}).code == kExitUsage);
  CHECK(run({"closure", "--D", "9"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "parse", "(0*10)"}).code == kExitUsage);
  CHECK(run({"nosuchcommand"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("json output does not depend on the worker count") {
  const Run a = run({"--format", "json", "--jobs", "1", "du", "(0*10)", "(0*110)o(0*10)", "--n", "6..9"});
  const Run b = run({"--format", "json", "--jobs", "3", "du", "(0*10)", "(0*110)o(0*10)", "--n", "6..9"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("parse and json rule output") {
  const Run p = run({"parse", "(1★001)∘(1★01)"});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("k=5") != std::string::npos);
  const Run j = run({"--format", "json", "--ascii", "parse", "(1*001)o(1*01)"});
  CHECK(j.code == kExitOk);
  CHECK(j.out.find("\"expr\":\"(1*001)o(1*01)\"") != std::string::npos);
  CHECK(j.out.find("\"k\":5") != std::string::npos);
  const Run c = run({"--format", "json", "families", "chain", "--r", "3"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("\"claim_holds\":true") != std::string::npos);
  CHECK(run({"parse", "6:00"}).code == kExitUsage);
}
