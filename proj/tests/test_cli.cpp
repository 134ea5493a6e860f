#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "posspan/digraph.hpp"
#include "posspan/serialize.hpp"
#include "testutil.hpp"

using namespace posspan;

#ifndef CLI_PATH
#define CLI_PATH "./posspan"
#endif

namespace {

int runCli(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string tmpPath(const std::string& name) {
    return std::string("/tmp/posspan_cli_") + name;
}

Json runJson(const std::string& args, const std::string& name) {
    std::string path = tmpPath(name);
    std::string cmd =
        std::string(CLI_PATH) + " " + args + " --json --out " + path + " 2> /dev/null";
    std::system(cmd.c_str());
    std::ifstream in(path);
    REQUIRE(in.good());
    Json j;
    in >> j;
    return j;
}

}  // namespace

TEST_CASE("check-pss exit codes and certificates") {
    CHECK(runCli("check-pss " + fixture("m1.mat")) == 0);
    CHECK(runCli("check-pss " + fixture("m2.mat")) == 1);
    CHECK(runCli("check-pss /nonexistent.mat") == 2);

    std::ofstream bad(tmpPath("bad.mat"));
    bad << "2 2\n1 2 3\n";
    bad.close();
    CHECK(runCli("check-pss " + tmpPath("bad.mat")) == 2);

    Mat m1 = parseMatFile(fixture("m1.mat"));
    Json a = runJson("check-pss " + fixture("m1.mat"), "m1.json");
    ParsedCertificate ca = certificateFromJson(a);
    CHECK(ca.verdict == "pss");
    CHECK(verifyPositiveCombination(m1, PositiveCombination{ca.values}));

    Mat m2 = parseMatFile(fixture("m2.mat"));
    Json b = runJson("check-pss " + fixture("m2.mat"), "m2.json");
    ParsedCertificate cb = certificateFromJson(b);
    CHECK(cb.verdict == "notPss");
    CHECK(verifySeparatingVector(m2, SeparatingVector{cb.values}, false));
}

TEST_CASE("decompose emits a verifying witness and distinct exit codes") {
    CHECK(runCli("decompose " + fixture("m1.mat")) == 0);
    CHECK(runCli("decompose " + fixture("m2.mat")) == 1);

    Json j = runJson("decompose " + fixture("m2.mat"), "dec.json");
    Decomposition d = decompositionFromJson(j);
    CHECK(verifyDecomposition(parseMatFile(fixture("m2.mat")), d));

    std::ofstream z(tmpPath("zero.mat"));
    z << "2 2\n0 0\n0 0\n";
    z.close();
    CHECK(runCli("decompose " + tmpPath("zero.mat")) == 2);
}

TEST_CASE("graph actions") {
    CHECK(runCli("graph " + fixture("ex39.dg") + " --action check") == 0);
    CHECK(runCli("graph " + fixture("ex310.dg") + " --action check") == 1);
    CHECK(runCli("graph " + fixture("fig1.dg") + " --action ears") == 0);
    CHECK(runCli("graph " + fixture("ex310.dg") + " --action ears") == 1);
    CHECK(runCli("graph " + fixture("ex310.dg") + " --action cut") == 0);
    CHECK(runCli("graph " + fixture("ex39.dg") + " --action cut") == 1);
    CHECK(runCli("graph " + fixture("ex39.dg") + " --action minimal") == 0);
    CHECK(runCli("graph " + fixture("ex310.dg") + " --action minimal") == 1);
    CHECK(runCli("graph " + fixture("ex39.dg") + " --action bogus") == 2);
    CHECK(runCli("graph " + fixture("ex39.dg") + " --action netmat") == 2);

    Json ears = runJson("graph " + fixture("fig1.dg") + " --action ears", "ears.json");
    EarDecomposition ed;
    ed.startVertex = ears.at("startVertex").get<int>();
    ed.ears = ears.at("ears").get<std::vector<std::vector<int>>>();
    CHECK(verifyEarDecomposition(parseDigraphFile(fixture("fig1.dg")), ed));
    CHECK(ed.ears.size() == 2);

    Json cut = runJson("graph " + fixture("ex310.dg") + " --action cut", "cut.json");
    OrientedCut oc;
    oc.v1 = cut.at("v1").get<std::vector<int>>();
    oc.v2 = cut.at("v2").get<std::vector<int>>();
    oc.cutArcs = cut.at("cutArcs").get<std::vector<int>>();
    CHECK(verifyOrientedCut(parseDigraphFile(fixture("ex310.dg")), oc));
}

TEST_CASE("netmat reproduces the worked network matrices") {
    std::string out = tmpPath("netmat.mat");
    std::string cmd = std::string(CLI_PATH) + " graph " + fixture("ex39.dg") +
                      " --action netmat --tree " + fixture("ex39.tree") + " --out " + out;
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(parseMatFile(out) == parseMatFile(fixture("m1.mat")));

    cmd = std::string(CLI_PATH) + " graph " + fixture("ex310.dg") + " --action netmat --tree " +
          fixture("ex310.tree") + " --out " + out;
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(parseMatFile(out) == parseMatFile(fixture("m2.mat")));

    // wrong tree file
    std::ofstream badTree(tmpPath("bad.tree"));
    badTree << "0 1 2 4\n";
    badTree.close();
    CHECK(runCli("graph " + fixture("ex39.dg") + " --action netmat --tree " + tmpPath("bad.tree")) ==
          2);
}

TEST_CASE("basis reports round-trip") {
    CHECK(runCli("basis " + fixture("d58.mat")) == 0);
    Json j = runJson("basis " + fixture("d58.mat"), "basis.json");
    PosBasisReport r = posBasisReportFromJson(j);
    CHECK(r.verdict);

    std::ofstream extra(tmpPath("notbasis.mat"));
    extra << "2 4\n1 0 -1 -1\n0 1 0 -1\n";
    extra.close();
    CHECK(runCli("basis " + tmpPath("notbasis.mat")) == 1);
    Json k = runJson("basis " + tmpPath("notbasis.mat"), "notbasis.json");
    PosBasisReport rk = posBasisReportFromJson(k);
    CHECK(!rk.verdict);
    REQUIRE(rk.removableCol);
    Mat d = parseMatFile(tmpPath("notbasis.mat"));
    CHECK(verifyPositiveCombination(d.dropCol(*rk.removableCol), *rk.removalCertificate));
}

TEST_CASE("generate emits verified family members") {
    std::string out = tmpPath("gen.out");
    for (const std::string& fam : {"min-pb", "max-pb", "pb-2l-1", "pb-l-2"}) {
        std::string cmd = std::string(CLI_PATH) + " generate --family " + fam +
                          " --l 3 --n 4 --seed 11 --out " + out;
        REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
        Mat d = parseMatFile(out);
        CHECK(d.rows() == 4);
    }
    for (const std::string& fam : {"digraph-2n-3", "digraph-n-1"}) {
        std::string cmd = std::string(CLI_PATH) + " generate --family " + fam +
                          " --n 6 --seed 5 --out " + out;
        REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
        Digraph g = parseDigraphFile(out);
        CHECK(g.n == 6);
        CHECK(isMinimallyStronglyConnected(g));
    }
    CHECK(runCli("generate --family bogus --out " + out) == 2);
    // seed is recorded in the JSON metadata
    Json j = runJson("generate --family min-pb --l 3 --seed 9", "gen.json");
    CHECK(j.at("seed").get<uint64_t>() == 9);
    CHECK(j.at("family").get<std::string>() == "min-pb");
}

TEST_CASE("usage errors exit with code two") {
    CHECK(runCli("") == 2);
    CHECK(runCli("unknown-subcommand") == 2);
    CHECK(runCli("check-pss") == 2);
}
