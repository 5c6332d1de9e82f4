#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"

#include "endtangle/report.hpp"

using namespace endtangle;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
  Json json;
};

CliRun run(std::vector<const char*> args) {
  args.insert(args.begin(), "endtangle");
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && r.out[0] == '{') {
    r.json = Json::parse(r.out);
  }
  return r;
}

}  // namespace

TEST_CASE("cohesion subcommand emits the documented schema") {
  CliRun r = run({"cohesion", "--family", "ray"});
  CHECK(r.code == 0);
  CHECK(r.json.at("schema_version") == kSchemaVersion);
  CHECK(r.json.at("command") == "cohesion");
  CHECK(r.json.at("family").at("name") == "ray");
  CHECK(r.json.at("result").at("category") == "bounded");
  CHECK(r.json.at("result").at("value") == 2);
  CHECK(r.json.at("budgets").at("window") == 20);
  CHECK(r.json.contains("timing"));
}

TEST_CASE("text and json emission carry the same verdict") {
  CliRun j = run({"cohesion", "--family", "dominated_ray", "--param", "m=2"});
  CliRun t = run({"cohesion", "--family", "dominated_ray", "--param", "m=2",
                  "--emit", "text"});
  CHECK(j.code == 0);
  CHECK(t.code == 0);
  CHECK(j.json.at("result").at("summary") == "Bounded(4)");
  CHECK(t.out.find("Bounded(4)") != std::string::npos);
}

TEST_CASE("reruns are byte-identical apart from timing") {
  CliRun a = run({"closure", "--family", "ray", "--k", "2"});
  CliRun b = run({"closure", "--family", "ray", "--k", "2"});
  Json ja = a.json, jb = b.json;
  ja.erase("timing");
  jb.erase("timing");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("closure of the grid slice at k=4") {
  CliRun r = run({"closure", "--family", "grid", "--k", "4"});
  CHECK(r.code == 0);
  CHECK(r.json.at("result").at("closed") == true);
  CHECK(r.json.at("result").at("decider").at("k") == 4);
  CHECK(r.json.at("result").at("decider").at("X").size() == 4);
}

TEST_CASE("sweep over dominated_ray(2) finds the closure boundary") {
  CliRun r = run({"sweep", "--family", "dominated_ray", "--param", "m=2",
                  "--k-max", "6"});
  CHECK(r.code == 0);
  const Json& per_k = r.json.at("result");
  REQUIRE(per_k.size() == 6);
  for (const Json& entry : per_k) {
    int k = entry.at("k");
    CHECK(entry.at("closed") == (k <= 3));  // deg + dom = 1 + 2
  }
}

TEST_CASE("decider subcommand verifies its certificate") {
  CliRun r = run({"decider", "--family", "ladder", "--param", "m=2", "--k",
                  "2"});
  CHECK(r.code == 0);
  CHECK(r.json.at("result").at("verification").at("ok") == true);
  CHECK(r.json.at("result").at("certificate").at("X").size() == 2);
}

TEST_CASE("limit-point subcommand") {
  CliRun r = run({"limit-point", "--family", "ray", "--k", "2", "--z-level",
                  "2"});
  CHECK(r.code == 0);
  CHECK(r.json.at("result").at("canonical") == "sep=[v3];A=[v0];end=B");
  CHECK(r.json.at("result").at("in_tau") == true);
}

TEST_CASE("oracle selftest passes") {
  CliRun r = run({"oracle-selftest"});
  CHECK(r.code == 0);
  CHECK(r.json.at("result").at("ok") == true);
  CHECK(r.json.at("result").at("cut_checks") == 200);
  CHECK(r.json.at("result").at("triangle_order2_count") == 8);
}

TEST_CASE("family spec files are accepted") {
  const char* path = "cli_family_spec.txt";
  {
    std::ofstream f(path);
    f << "# fixture\nfamily=ladder\nparam.m=3\n";
  }
  CliRun r = run({"cohesion", "--family-spec", path});
  std::remove(path);
  CHECK(r.code == 0);
  CHECK(r.json.at("family").at("name") == "ladder");
  CHECK(r.json.at("result").at("summary") == "Bounded(4)");
}

TEST_CASE("environment variables mirror the budget flags") {
  setenv("ENDTANGLE_WINDOW", "16", 1);
  CliRun r = run({"cohesion", "--family", "ray"});
  unsetenv("ENDTANGLE_WINDOW");
  CHECK(r.code == 0);
  CHECK(r.json.at("budgets").at("window") == 16);
}

TEST_CASE("error handling and exit codes") {
  SUBCASE("unknown family") {
    CliRun r = run({"cohesion", "--family", "moebius"});
    CHECK(r.code == 1);
    CHECK(r.err.find("unknown family") != std::string::npos);
  }
  SUBCASE("usage error") {
    CliRun r = run({"closure", "--family", "ray"});  // missing --k
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
  }
  SUBCASE("no subcommand") {
    CliRun r = run({});
    CHECK(r.code == 1);
  }
  SUBCASE("decider beyond the cohesion bound") {
    CliRun r = run({"decider", "--family", "ray", "--k", "3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("no size-k decider") != std::string::npos);
  }
}
