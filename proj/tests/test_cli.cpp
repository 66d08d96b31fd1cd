#include <cstdio>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "support/run_cli.hpp"

using clitest::manifest_path;
using clitest::run_cli;
using clitest::run_cmd;
using clitest::write_temp;

namespace {

const std::string kPair = manifest_path("pair.json");

}  // namespace

TEST_CASE("cli: info prints the invariant block") {
    auto r = run_cli("info -m " + kPair + " M");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("rank:             22") != std::string::npos);
    CHECK(r.out.find("(3,19), integer -16") != std::string::npos);
    CHECK(r.out.find("b2+:              3") != std::string::npos);
    CHECK(r.out.find("parity:           even") != std::string::npos);
    CHECK(r.out.find("minimal:          yes") != std::string::npos);

    auto r1 = run_cli("info -m " + kPair + " X1");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("rank:             23") != std::string::npos);
    CHECK(r1.out.find("minimal:          no") != std::string::npos);
    CHECK(r1.out.find("exceptional classes:") != std::string::npos);

    // b2+ = 1 example via a temp manifest.
    const auto p8 = write_temp("p8", R"({
      "version": 1,
      "manifolds": [
        {"name": "P8", "form": "<1>+8<-1>", "c1": [3, 1, 1, 1, 1, 1, 1, 1, 1]}
      ]
    })");
    auto rp = run_cli("info -m " + p8 + " P8");
    CHECK(rp.exit_code == 0);
    CHECK(rp.out.find("b2+:              1") != std::string::npos);
    std::remove(p8.c_str());
}

TEST_CASE("cli: bad input exits 2") {
    CHECK(run_cli("info -m /nonexistent.json M").exit_code == 2);
    CHECK(run_cli("info -m " + kPair + " NOPE").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("eval").exit_code == 2);  // missing required --manifest

    const auto bad = write_temp("bad", R"({"version": 1, "manifolds": [
        {"name": "Z", "gram": [[0, 1], [1]], "c1": [0, 0]}]})");
    CHECK(run_cli("info -m " + bad + " Z").exit_code == 2);
    std::remove(bad.c_str());

    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("eval --help").exit_code == 0);
}

TEST_CASE("cli: eval reproduces the bundled queries") {
    auto all = run_cli("eval -m " + kPair);
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("query 0 on X1: GW = 1") != std::string::npos);
    CHECK(all.out.find("query 1 on X1: GW = -1") != std::string::npos);
    CHECK(all.out.find("query 2 on X1xS2: GW = -1") != std::string::npos);
    CHECK(all.out.find("query 3 on X1xS2: GW = 1") != std::string::npos);

    auto one = run_cli("eval -m " + kPair + " -q 2 --trace");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("query 2 on X1xS2: GW = -1") != std::string::npos);
    CHECK(one.out.find("query 0") == std::string::npos);
    CHECK(one.out.find("Corollary 3.6") != std::string::npos);
    CHECK(one.out.find("dimension condition holds") != std::string::npos);

    CHECK(run_cli("eval -m " + kPair + " -q 99").exit_code == 2);
}

TEST_CASE("cli: eval --oracle agrees on the bundled queries") {
    auto r = run_cli("eval -m " + kPair + " --oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(AGREE)") != std::string::npos);
    CHECK(r.out.find("DISAGREE") == std::string::npos);
}

TEST_CASE("cli: eval --json is canonical and parseable") {
    auto r = run_cli("eval -m " + kPair + " --json --oracle");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 4);
    CHECK(j[0].at("space") == "X1");
    CHECK(j[0].at("value").at("kind") == "integer");
    CHECK(j[0].at("value").at("value") == 1);
    CHECK(j[0].at("agree") == true);
    CHECK(j[2].at("value").at("value") == -1);
    CHECK(j[3].at("value").at("value") == 1);
    for (const auto& entry : j) CHECK(entry.at("trace").is_array());

    // Byte-stable across runs.
    auto r2 = run_cli("eval -m " + kPair + " --json --oracle");
    CHECK(r2.out == r.out);
}

TEST_CASE("cli: blowup emits a loadable fragment") {
    auto to_stdout = run_cli("blowup -m " + kPair + " X2 E");
    CHECK(to_stdout.exit_code == 0);
    const auto j = nlohmann::json::parse(to_stdout.out);
    CHECK(j.at("manifolds")[0].at("name") == "X2#E");

    const auto out = write_temp("blown", "");
    CHECK(run_cli("blowup -m " + kPair + " X2 E -o " + out).exit_code == 0);
    auto info = run_cli("info -m " + out + " X2#E");
    CHECK(info.exit_code == 0);
    CHECK(info.out.find("rank:             24") != std::string::npos);
    CHECK(info.out.find("minimal:          no") != std::string::npos);
    std::remove(out.c_str());

    // Label collision inside the library surfaces as exit 2 ("u" is a basis label of X1).
    CHECK(run_cli("blowup -m " + kPair + " X1 u").exit_code == 2);
}

TEST_CASE("cli: distinguish") {
    auto r = run_cli("distinguish -m " + kPair + " X1 X2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict: Distinguished") != std::string::npos);
    CHECK(r.out.find("= -1") != std::string::npos);

    auto rj = run_cli("distinguish -m " + kPair + " X2 X1 --json");
    CHECK(rj.exit_code == 0);
    const auto j = nlohmann::json::parse(rj.out);
    CHECK(j.at("verdict") == "Distinguished");
    CHECK(j.at("witness").at("nonminimal_space") == "X1 x S2");

    // M vs X2: not homeomorphic (rank differs).
    auto rh = run_cli("distinguish -m " + kPair + " M X2");
    CHECK(rh.exit_code == 0);
    CHECK(rh.out.find("verdict: HypothesesNotMet") != std::string::npos);
}

TEST_CASE("cli: oracle-check seeding") {
    auto a = run_cli("oracle-check --seed 42 --count 60");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("oracle-check: seed 42, 60 random queries") != std::string::npos);
    CHECK(a.out.find("disagreements: 0") != std::string::npos);
    CHECK(a.out.find("permutation check:") != std::string::npos);
    CHECK(a.out.find("OK") != std::string::npos);

    // Environment seed matches an explicit --seed run.
    auto b = run_cmd("GWZERO_SEED=42 " + std::string(GWZERO_CLI_PATH) +
                     " oracle-check --count 60");
    CHECK(b.exit_code == 0);
    CHECK(b.out == a.out);

    // --seed wins over the environment.
    auto c = run_cmd("GWZERO_SEED=7 " + std::string(GWZERO_CLI_PATH) +
                     " oracle-check --seed 42 --count 60");
    CHECK(c.out == a.out);

    // Default seed is 1729.
    auto d = run_cli("oracle-check --count 40");
    CHECK(d.out.find("seed 1729") != std::string::npos);

    CHECK(run_cmd("GWZERO_SEED=pickle " + std::string(GWZERO_CLI_PATH) +
                  " oracle-check --count 10")
              .exit_code == 2);
    CHECK(run_cli("oracle-check --count 0").exit_code == 2);
}
