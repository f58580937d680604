#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "schroeder/cli.hpp"

using schroeder::run_cli;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"schroeder"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("seq emits the published table as CSV") {
    CliRun r = run({"seq", "--family", "sd", "--d", "2", "--n", "1..8", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n,value\n1,1\n2,2\n3,10\n4,62\n5,430\n6,3194\n7,24850\n8,199910\n");
}

TEST_CASE("seq methods agree and honor rationals") {
    for (const char* method : {"definition", "recurrence", "series", "auto"}) {
        CliRun r = run({"seq", "--family", "sd", "--d", "-1/2", "--n", "4..4", "--method",
                        method});
        CHECK(r.exit_code == 0);
        CHECK(r.out == "4 1/8\n");
    }
    CliRun sbar = run({"seq", "--family", "sbar", "--d", "1", "--n", "1..8", "--format", "csv"});
    CHECK(sbar.exit_code == 0);
    CHECK(sbar.out == "n,value\n1,1\n2,2\n3,6\n4,22\n5,90\n6,394\n7,1806\n8,8558\n");
}

TEST_CASE("seq JSON carries num/den strings") {
    CliRun r = run({"seq", "--family", "sd", "--d", "-1/2", "--n", "4..4", "--format", "json"});
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["values"][0]["value"]["num"] == "1");
    CHECK(doc["values"][0]["value"]["den"] == "8");
}

TEST_CASE("help exits cleanly") {
    CliRun r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("seq") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
    CHECK(run({"seq", "--family", "sd", "--d", "1/0", "--n", "1..4"}).exit_code == 2);
    CHECK(run({"seq", "--family", "sd", "--d", "x", "--n", "1..4"}).exit_code == 2);
    CHECK(run({"seq", "--family", "sd", "--d", "1", "--n", "4..1"}).exit_code == 2);
    CHECK(run({"seq", "--family", "sd", "--d", "1", "--n", "0..2"}).exit_code == 2);
    CHECK(run({"seq", "--d", "1", "--n", "1..4", "--method", "sorcery"}).exit_code == 2);
    CHECK(run({"nonsense"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"objects", "--kind", "dyck", "--n", "25"}).exit_code == 2);
}

TEST_CASE("series subcommand") {
    CliRun r = run({"series", "--kind", "narayana", "--d", "-1", "--n-max", "8", "--format",
                    "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,coefficient\n0,0\n1,1\n2,-1\n3,0\n4,1\n5,0\n6,-2\n7,0\n8,5\n");
}

TEST_CASE("triangle subcommand") {
    CliRun r = run({"triangle", "--kind", "small", "--n", "5..5", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,k,value\n5,0,0\n5,1,1\n5,2,9\n5,3,21\n5,4,14\n");
    CHECK(run({"triangle", "--kind", "large", "--n", "1..3"}).exit_code == 2);
}

TEST_CASE("objects counts and emission") {
    CHECK(run({"objects", "--kind", "trees", "--n", "4"}).out == "11\n");
    CHECK(run({"objects", "--kind", "small", "--n", "4"}).out == "11\n");
    CHECK(run({"objects", "--kind", "large", "--n", "4"}).out == "22\n");
    CHECK(run({"objects", "--kind", "dyck", "--n", "5"}).out == "14\n");

    CliRun emitted = run({"objects", "--kind", "dyck", "--n", "3", "--emit"});
    CHECK(emitted.out == "UUDD\nUDUD\n");

    CliRun trees = run({"objects", "--kind", "trees", "--n", "3", "--emit"});
    CHECK(trees.out == "(()()())\n(()(()()))\n((()())())\n");

    // byte-stable across runs
    CliRun again = run({"objects", "--kind", "trees", "--n", "3", "--emit"});
    CHECK(trees.out == again.out);

    CliRun overridden = run({"objects", "--kind", "dyck", "--n", "13", "--max-objects", "13"});
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.out == "208012\n");
}

TEST_CASE("bijections reports") {
    CliRun r = run({"bijections", "--name", "beta", "--n", "4"});
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["domain_size"] == 11);
    CHECK(doc["range_size"] == 11);
    CHECK(doc["passed"] == true);

    CliRun pairs = run({"bijections", "--name", "gamma", "--n", "3", "--emit-pairs"});
    CHECK(pairs.exit_code == 0);
    CHECK(pairs.out.find("UUDD -> UDUD") != std::string::npos);

    CliRun lemma = run({"bijections", "--name", "lemma", "--n", "4"});
    auto lemma_doc = nlohmann::json::parse(lemma.out);
    CHECK(lemma_doc["domain_size"] == 5);
    CHECK(lemma_doc["statistic_failures"] == 0);
}

TEST_CASE("peaks table") {
    CliRun r = run({"peaks", "--n", "1..10", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n,even,odd\n1,1,0\n2,0,1\n3,1,1\n4,3,2\n5,7,7\n6,20,22\n7,66,66\n"
          "8,217,212\n9,715,715\n10,2424,2438\n");
}

TEST_CASE("asym profile") {
    CliRun r = run({"asym", "--d", "1", "--n", "100", "--compare-exact"});
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["rho"].get<double>() == doctest::Approx(5.8284271247).epsilon(1e-9));
    CHECK(doc["relative_error"].get<double>() < 0.005);
    CHECK(run({"asym", "--d", "0.5", "--n", "10"}).exit_code == 0);
    CHECK(run({"asym", "--d", "-1", "--n", "10"}).exit_code == 2);
}

TEST_CASE("oeis-check against a local fixture") {
    std::string path = "cli_test_bfile.txt";
    {
        std::ofstream f(path);
        f << "# A001003 prefix\n0 1\n1 1\n2 3\n3 11\n4 45\n5 197\n6 903\n7 4279\n";
    }
    CliRun clean = run({"oeis-check", "--seq", "A001003", "--bfile", path, "--family", "sd",
                        "--d", "1", "--offset-shift", "-1", "--n-max", "8"});
    CHECK(clean.exit_code == 0);
    auto doc = nlohmann::json::parse(clean.out);
    CHECK(doc["compared"] == 8);
    CHECK(doc["mismatches"].empty());

    CliRun shifted = run({"oeis-check", "--seq", "A001003", "--bfile", path, "--family", "sd",
                          "--d", "1", "--offset-shift", "0", "--n-max", "8"});
    CHECK(shifted.exit_code == 1);

    CliRun fetchless = run({"oeis-check", "--seq", "A001003", "--fetch", "--family", "sd",
                            "--d", "1", "--n-max", "8"});
    CHECK(fetchless.exit_code == 2);  // network disabled by default

    CHECK(run({"oeis-check", "--seq", "junk", "--bfile", path, "--d", "1"}).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("verify subcommand") {
    CliRun r = run({"verify", "--suite", "triangles", "--n-max", "8"});
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["failures"] == 0);
    for (const auto& check : doc["checks"]) CHECK(check["passed"] == true);

    CliRun all = run({"verify", "--suite", "all", "--n-max", "7"});
    CHECK(all.exit_code == 0);
    CHECK(nlohmann::json::parse(all.out)["failures"] == 0);

    // an n-max beyond the object bound degrades to the bound instead of erroring
    CliRun capped = run({"verify", "--suite", "colored", "--n-max", "40"});
    CHECK(capped.exit_code == 0);

    CliRun gridded = run({"verify", "--suite", "identities", "--n-max", "12", "--d-grid",
                          "-2,1/3,2"});
    CHECK(gridded.exit_code == 0);
    CHECK(nlohmann::json::parse(gridded.out)["failures"] == 0);

    CHECK(run({"verify", "--suite", "bogus"}).exit_code == 2);
    CHECK(run({"verify", "--suite", "identities", "--d-grid", "1,x"}).exit_code == 2);
}

TEST_CASE("outputs are byte-stable across runs") {
    const std::vector<std::string> cases[] = {
        {"seq", "--family", "sd", "--d", "7/2", "--n", "1..10", "--format", "json"},
        {"series", "--kind", "sd", "--d", "-3/2", "--n-max", "12", "--format", "csv"},
        {"triangle", "--kind", "narayana", "--n", "1..6", "--format", "json"},
        {"objects", "--kind", "small", "--n", "5", "--emit"},
    };
    for (const auto& args : cases) {
        CliRun a = run(args);
        CliRun b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}
