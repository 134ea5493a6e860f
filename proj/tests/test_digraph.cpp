#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "posspan/digraph.hpp"
#include "testutil.hpp"

using namespace posspan;

namespace {

Digraph parseDg(const std::string& s) {
    std::istringstream in(s);
    return parseDigraph(in);
}

Digraph randomDigraph(int n, int m, std::mt19937_64& rng) {
    Digraph g;
    g.n = n;
    std::uniform_int_distribution<int> v(0, n - 1);
    while (int(g.arcs.size()) < m) {
        int t = v(rng), h = v(rng);
        if (t != h) g.arcs.push_back({t, h});
    }
    return g;
}

}  // namespace

TEST_CASE("digraph parse and format round-trip") {
    Digraph g = parseDigraphFile(fixture("ex39.dg"));
    CHECK(g.n == 5);
    CHECK(g.arcs.size() == 6);
    CHECK(g.arcs[0] == std::pair<int, int>{4, 0});
    std::istringstream in(formatDigraph(g));
    Digraph h = parseDigraph(in);
    CHECK(h.n == g.n);
    CHECK(h.arcs == g.arcs);
}

TEST_CASE("digraph validation rejects bad arcs") {
    CHECK_THROWS_AS(parseDg("2 1\n0 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parseDg("2 1\n1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parseDg("2 2\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parseDg("-1 0\n"), std::invalid_argument);
}

TEST_CASE("connectivity on the fixture digraphs") {
    Digraph a = parseDigraphFile(fixture("ex39.dg"));
    CHECK(isWeaklyConnected(a));
    CHECK(isStronglyConnected(a));
    Digraph b = parseDigraphFile(fixture("ex310.dg"));
    CHECK(isWeaklyConnected(b));
    CHECK(!isStronglyConnected(b));

    Digraph single;
    single.n = 1;
    CHECK(isWeaklyConnected(single));
    CHECK(isStronglyConnected(single));

    CHECK(!isWeaklyConnected(parseDg("3 1\n0 1\n")));
    CHECK(isWeaklyConnected(parseDg("3 2\n0 1\n2 1\n")));
    CHECK(!isStronglyConnected(parseDg("3 2\n0 1\n2 1\n")));
}

TEST_CASE("oriented cut of the non-strongly-connected example") {
    Digraph g = parseDigraphFile(fixture("ex310.dg"));
    auto cut = findOrientedCut(g);
    REQUIRE(cut);
    CHECK(verifyOrientedCut(g, *cut));
    // restricted to the fixture's spanning tree the cut is arcs 1 and 2
    std::vector<int> treeCut;
    for (int a : cut->cutArcs)
        if (a <= 5) treeCut.push_back(a);
    std::sort(treeCut.begin(), treeCut.end());
    CHECK(treeCut == std::vector<int>{0, 1});
}

TEST_CASE("no oriented cut exists in a strongly connected digraph") {
    CHECK(!findOrientedCut(parseDigraphFile(fixture("ex39.dg"))));
    CHECK_THROWS_AS(findOrientedCut(parseDg("3 1\n0 1\n")), std::domain_error);
}

TEST_CASE("cut or strong connectivity, never both, on random digraphs") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 120; ++t) {
        Digraph g = randomDigraph(3 + int(rng() % 4), 4 + int(rng() % 6), rng);
        if (!isWeaklyConnected(g)) continue;
        auto cut = findOrientedCut(g);
        CHECK(cut.has_value() == !isStronglyConnected(g));
        if (cut) {
            CHECK(verifyOrientedCut(g, *cut));
            CHECK(cut->v1.size() + cut->v2.size() == size_t(g.n));
        }
    }
}

TEST_CASE("ear decomposition of the two-ear example") {
    Digraph g = parseDigraphFile(fixture("fig1.dg"));
    EarDecomposition ed = earDecompose(g, 0);
    CHECK(verifyEarDecomposition(g, ed));
    CHECK(ed.ears.size() == 2);
    size_t used = 0;
    for (const auto& ear : ed.ears) used += ear.size();
    CHECK(used == g.arcs.size());
}

TEST_CASE("ear decomposition exists exactly for strongly connected digraphs") {
    CHECK_THROWS_AS(earDecompose(parseDigraphFile(fixture("ex310.dg")), 0), std::domain_error);
    std::mt19937_64 rng(52);
    int seen = 0;
    for (int t = 0; t < 80; ++t) {
        Digraph g = randomDigraph(4 + int(rng() % 3), 6 + int(rng() % 5), rng);
        if (!isStronglyConnected(g)) continue;
        ++seen;
        EarDecomposition ed = earDecompose(g, int(rng() % g.n));
        CHECK(verifyEarDecomposition(g, ed));
    }
    CHECK(seen > 0);
}

TEST_CASE("spanning tree recognition") {
    Digraph g = parseDigraphFile(fixture("ex39.dg"));
    CHECK(isSpanningTree(g, {0, 1, 2, 3}));
    CHECK(!isSpanningTree(g, {0, 1, 2, 4}));
    CHECK(!isSpanningTree(g, {0, 1, 2}));
    CHECK(!isSpanningTree(g, {0, 0, 1, 2}));
}

TEST_CASE("network matrices of the worked examples") {
    Digraph a = parseDigraphFile(fixture("ex39.dg"));
    CHECK(networkMatrix(a, {0, 1, 2, 3}) == parseMatFile(fixture("m1.mat")));
    Digraph b = parseDigraphFile(fixture("ex310.dg"));
    CHECK(networkMatrix(b, {0, 1, 2, 3, 4, 5}) == parseMatFile(fixture("m2.mat")));
}

TEST_CASE("tree columns of a network matrix form an identity block") {
    Digraph g = parseDigraphFile(fixture("ex39.dg"));
    Mat m = networkMatrix(g, {0, 1, 2, 3});
    CHECK(m.selectCols({0, 1, 2, 3}) == Mat::identity(4));
}

TEST_CASE("changing the tree acts by the basis formed by its columns") {
    Digraph g = parseDigraphFile(fixture("ex39.dg"));
    SpanningTree t1 = {0, 1, 2, 3};
    Mat m = networkMatrix(g, t1);
    int n1 = g.n - 1;
    std::vector<int> idx(n1);
    // try every other spanning tree of the example
    std::vector<int> sel;
    std::function<void(int)> rec = [&](int from) {
        if (int(sel.size()) == n1) {
            if (!isSpanningTree(g, sel)) return;
            Mat b = m.selectCols(sel);
            Mat expected = inverse(b) * m;
            CHECK(networkMatrix(g, sel) == expected);
            return;
        }
        for (int a = from; a < int(g.arcs.size()); ++a) {
            sel.push_back(a);
            rec(a + 1);
            sel.pop_back();
        }
    };
    rec(0);
    (void)idx;
}

TEST_CASE("minimality of strongly connected digraphs") {
    CHECK(isMinimallyStronglyConnected(parseDigraphFile(fixture("ex39.dg"))));
    CHECK(!isMinimallyStronglyConnected(parseDigraphFile(fixture("ex310.dg"))));
    // a circuit plus a chord is not minimal
    Digraph g = parseDg("3 4\n0 1\n1 2\n2 0\n0 2\n");
    CHECK(!isMinimallyStronglyConnected(g));
    CHECK(isMinimallyStronglyConnected(parseDg("3 3\n0 1\n1 2\n2 0\n")));
}

TEST_CASE("triangle family generator hits 2n-3 arcs and stays minimal") {
    Digraph g = genMinScTwoNMinus3(9, 3, {3, 1}, 7);
    CHECK(g.n == 9);
    CHECK(g.arcs.size() == 15);
    CHECK(isMinimallyStronglyConnected(g));
    for (uint64_t seed = 0; seed < 6; ++seed) {
        int n = 5 + int(seed % 3);
        std::vector<int> trees = seed % 2 ? std::vector<int>{n - 3} : std::vector<int>{};
        int c = seed % 2 ? 1 : n - 2;
        Digraph h = genMinScTwoNMinus3(n, c, trees, seed);
        CHECK(int(h.arcs.size()) == 2 * h.n - 3);
        CHECK(isMinimallyStronglyConnected(h));
    }
    CHECK_THROWS_AS(genMinScTwoNMinus3(5, 1, {}, 0), std::invalid_argument);
}

TEST_CASE("two-circuit family generator hits n+1 arcs and stays minimal") {
    Digraph g = genMinScNPlus1(5, 1, 3);
    CHECK(g.n == 5);
    CHECK(g.arcs.size() == 6);
    CHECK(isMinimallyStronglyConnected(g));
    for (uint64_t seed = 0; seed < 8; ++seed) {
        int n = 3 + int(seed % 5);
        Digraph h = genMinScNPlus1(n, int(seed % uint64_t(n - 2)), seed);
        CHECK(int(h.arcs.size()) == n + 1);
        CHECK(isMinimallyStronglyConnected(h));
    }
    CHECK_THROWS_AS(genMinScNPlus1(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(genMinScNPlus1(5, 3, 1), std::invalid_argument);
}

TEST_CASE("sign network matrix search recovers the fixture tree") {
    Digraph g = parseDigraphFile(fixture("ex39.dg"));
    Mat m1 = parseMatFile(fixture("m1.mat"));
    auto tree = verifySignIsNetworkMatrix(g, m1);
    REQUIRE(tree);
    CHECK(isSpanningTree(g, *tree));
    Mat m = networkMatrix(g, *tree);
    // same column multiset
    std::multiset<Vec> a, b;
    for (int j = 0; j < m.cols(); ++j) {
        a.insert(m.col(j));
        b.insert(m1.col(j));
    }
    CHECK(a == b);
    Mat notNet = Mat::identity(5);
    CHECK(!verifySignIsNetworkMatrix(g, notNet));
}
