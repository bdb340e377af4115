#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "wcl/cli.hpp"

using namespace wcl;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(WCL_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("eval and satisfies") {
  const Run a = run({"eval", "-e", "(2 (*) {p}) (#) (3 (*) {q})", "--config", "{{p},{q}}"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == "6\n");
  CHECK(a.err.empty());

  CHECK(run({"satisfies", "-e", "{p} + {q}", "-c", "{{p},{q}}"}).out == "true\n");
  const Run no = run({"satisfies", "-e", "{p}", "-c", "{{p},{q}}"});
  CHECK(no.code == kExitFail);
  CHECK(no.out == "false\n");

  const Run mp = run({"eval", "-e", "k (*) {p}", "-k", "minplus", "--bind", "k=2.5", "-c",
                      "{{p}}"});
  CHECK(mp.out == "2.5\n");
}

TEST_CASE("usage and parse errors exit with 2 and write to stderr") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"eval", "-e", "{p", "-c", "{{p}}"},
           {"eval", "-e", "{p}", "-c", "{{z}}", "--ports", "p"},
           {"eval", "-e", "2", "-k", "nosuch", "-c", "{{p}}"},
           {"fnf", "-e", "true", "--format", "xml"},
           {"selftest", "--filter", "no-such-criterion"},
           {"tsp"},
       }) {
    const Run r = run(args);
    CHECK(r.code == kExitUsage);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("normal forms") {
  const Run r = run({"fnf", "-e", "true", "--ports", "p,q", "--format", "tsv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "1\t{{p}}\n1\t{{p}, {p, q}}\n1\t{{p}, {p, q}, {q}}\n1\t{{p}, {q}}\n1\t{{p, q}}\n"
        "1\t{{p, q}, {q}}\n1\t{{q}}\n");
}

TEST_CASE("equivalence with a witness") {
  const Run same = run({"equiv", "-e", "{p} + {p}", "-e", "{p}"});
  CHECK(same.code == kExitOk);
  const Run nat = run({"equiv", sample("counterexample.wpcl"), sample("counterexample_split.wpcl")});
  CHECK(nat.code == kExitFail);
  CHECK(nat.out.find("not equivalent") == 0);
  CHECK(nat.out.find("witness") != std::string::npos);
  const Run fnf = run({"equiv", "-e", "close(close(2))", "-e", "close(2)", "--ports", "p,q",
                       "--method", "fnf"});
  CHECK(fnf.code == kExitFail);
}

TEST_CASE("first-order evaluation on a model") {
  const Run sat = run({"focl-eval", sample("every_client.focl"), "-m", sample("client_server.model"),
                       "-c", sample("pair.cfg")});
  CHECK(sat.code == kExitOk);
  CHECK(sat.out == "true\n");
  const Run cost = run({"focl-eval", sample("cheapest_link.wfocl"), "-m",
                        sample("client_server.model"), "-c", sample("pair.cfg"), "-k", "minplus",
                        "--bind", "cost=2"});
  CHECK(cost.code == kExitOk);
  CHECK(cost.out == "4\n");
  const Run outside = run({"focl-eval", "-e", "true", "--dialect", "focl", "-m",
                           sample("client_server.model"), "-c", "{{a.req}, {z.x}}"});
  CHECK(outside.code == kExitFail);
  CHECK(outside.out == "false\n");
}

TEST_CASE("styles") {
  const Run tsp = run({"tsp", "--matrix", sample("tsp5.csv")});
  CHECK(tsp.code == kExitOk);
  CHECK(tsp.out.find("tours 12\n") != std::string::npos);
  CHECK(tsp.out.find("optimum 19\nbrute-force 19\n") != std::string::npos);
  CHECK(run({"example", "pubsub"}).out.find("value 0.72\n") != std::string::npos);
  CHECK(run({"example", "master-slave"}).code == kExitOk);
  CHECK(run({"example", "master-slave", "--first-order"}).code == kExitOk);
}

TEST_CASE("repeated runs print identical bytes") {
  const std::vector<std::vector<std::string>> cmds{
      {"fnf", "-e", "(2 (*) {p}) (#) close(3 (*) {q})", "--ports", "p,q"},
      {"example", "master-slave", "--show-formula"},
      {"selftest", "--filter", "counterexample"},
  };
  for (const auto& c : cmds) {
    const Run a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("selftest reports a perturbed fixture") {
  const Run r = run({"selftest", "--filter", "tsp", "--perturb-fixture"});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("FAIL") == 0);
}
