#include <sstream>

#include "doctest.h"
#include "logarr/cli/cli.hpp"

using namespace logarr;
using cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(LOGARR_FIXTURES) + "/" + name; }

report::Json parse(const Result& r) { return report::Json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("charpoly of Edelman-Reiner") {
    const auto r = call({"charpoly", "--family", "edelman-reiner"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 + 15*t + 80*t^2 + 170*t^3 + 104*t^4") != std::string::npos);
    const auto j = parse(call({"charpoly", "--family", "edelman-reiner", "--json"}));
    CHECK(j["pi"] == report::Json::parse("[1,15,80,170,104]"));
    CHECK(j["pi_at_minus_one"] == 0);
  }

  TEST_CASE("main theorem on Edelman-Reiner with the betti strategy") {
    const auto r = call({"verify", "main-theorem", "--family", "edelman-reiner", "--strategy", "betti", "--json"});
    CHECK(r.code == 0);
    const auto j = parse(r);
    CHECK(j["equal"] == true);
    CHECK(j["pi_bar"] == report::Json::parse("[1,15,80,170]"));
    CHECK(j["ct_omega1"] == report::Json::parse("[1,15,80,170]"));
  }

  TEST_CASE("negative verdicts exit with 1 and carry the witness") {
    const auto r = call({"local-freeness", "--family", "nlf-demo", "--json"});
    CHECK(r.code == 1);
    const auto j = parse(r);
    CHECK(j["locally_free"] == false);
    CHECK(j["witness"]["rank"] == 3);
    CHECK(j["witness"]["members"] == report::Json::parse("[0,1,2,3]"));

    const auto h = call({"verify", "main-theorem", "--family", "nlf-demo", "--json"});
    CHECK(h.code == 1);
    CHECK(parse(h)["error"] == "hypothesis");
    CHECK(parse(h)["witness"]["members"] == report::Json::parse("[0,1,2,3]"));

    CHECK(call({"freeness", "--family", "generic:2,4,1"}).code == 1);
    CHECK(call({"resolution", "ziegler", "--family", "nlf-demo"}).code == 1);
    CHECK(call({"resolution", "lebelt", "--family", "generic:3,6", "--p", "3", "--side", "form"}).code == 1);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"charpoly"}).code == 2);
    CHECK(call({"charpoly", "--family", "boolean:2", "--file", fixture("three_lines.json")}).code == 2);
    CHECK(call({"charpoly", "--family", "no-such-family"}).code == 2);
    CHECK(call({"charpoly", "--family", "boolean:2", "--backend", "quantum"}).code == 2);
    CHECK(call({"charpoly", "--family", "boolean:2", "--bogus"}).code == 2);
    CHECK(call({"verify"}).code == 2);
    CHECK(call({"module-dims", "--family", "boolean:2", "--p", "7"}).code == 2);
    CHECK(call({"charpoly", "--file", fixture("duplicate.json")}).code == 2);
    CHECK(call({"charpoly", "--file", fixture("missing.json")}).code == 2);
    CHECK(call({"verify", "chern-split", "--twists", "1,x", "--n", "2"}).code == 2);
    CHECK(call({"--help"}).code == 0);
  }

  TEST_CASE("small cutoffs exit with 3") {
    const auto r = call({"hilbert", "--family", "edelman-reiner", "--euler-complement", "--cutoff", "8", "--json"});
    CHECK(r.code == 3);
    CHECK(parse(r)["error"] == "cutoff");
    CHECK(call({"betti", "--family", "edelman-reiner", "--euler-complement", "--gen-cutoff", "6", "--cutoff", "8"}).code == 3);
  }

  TEST_CASE("file input") {
    const auto j = parse(call({"charpoly", "--file", fixture("three_lines.json"), "--json"}));
    CHECK(j["chi"] == report::Json::parse("[2,-3,1]"));
    CHECK(j["arrangement"]["name"] == "three-lines");
  }

  TEST_CASE("demo runs green and detects tampering") {
    const auto ok = call({"demo", "edelman-reiner"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("all values match") != std::string::npos);
    CHECK(ok.out.find("c1^3/6") != std::string::npos);

    const auto mod = parse(call({"demo", "edelman-reiner", "--backend", "modular", "--json"}));
    CHECK(mod["mismatches"].empty());
    CHECK(mod["probabilistic"] == true);

    const auto bad = call({"demo", "edelman-reiner", "--golden", fixture("er_golden_tampered.json"), "--json"});
    CHECK(bad.code == 1);
    const auto report = parse(bad);
    std::vector<std::string> fields;
    for (const auto& m : report["mismatches"]) fields.push_back(m["field"].get<std::string>());
    CHECK(fields == std::vector<std::string>{"rank3_count", "ct_omega1_0"});
  }

  TEST_CASE("output is byte stable and JSON round-trips") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"lattice", "--family", "braid:4", "--json"},
             {"betti", "--family", "generic:2,4", "--side", "form", "--json"},
             {"module-dims", "--family", "boolean:3", "--p", "2", "--cutoff", "4", "--json"},
             {"resolution", "ziegler", "--family", "generic:3,5", "--seed", "2", "--json"},
             {"verify", "top-chern", "--count", "10", "--json"}}) {
      const auto a = call(args), b = call(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      const auto j = report::Json::parse(a.out);
      CHECK(report::Json::parse(j.dump()).dump() == j.dump());
      CHECK(j.dump(2) + "\n" == a.out);
    }
  }

  TEST_CASE("generic seeds from the flag") {
    const auto a = parse(call({"lattice", "--family", "generic:2,5", "--seed", "4", "--json"}));
    const auto b = parse(call({"lattice", "--family", "generic:2,5,4", "--json"}));
    CHECK(a == b);
    CHECK(a["arrangement"]["name"] == "generic(2,5,4)");
  }
}
