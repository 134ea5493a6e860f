#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "posspan/matrix.hpp"

namespace posspan {

struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // (tail, head), 0-indexed vertices
};

// First line "n m", then one "tail head" pair per arc.
Digraph parseDigraph(std::istream& in);
Digraph parseDigraphFile(const std::string& path);
std::string formatDigraph(const Digraph& g);
void checkDigraph(const Digraph& g);

bool isWeaklyConnected(const Digraph& g);
bool isStronglyConnected(const Digraph& g);

// Bipartition with every crossing arc oriented from v1 into v2.
struct OrientedCut {
    std::vector<int> v1, v2;     // vertex sets
    std::vector<int> cutArcs;    // arc indices from v1 to v2
};

// nullopt when strongly connected; throws std::domain_error when the
// underlying undirected graph is disconnected.
std::optional<OrientedCut> findOrientedCut(const Digraph& g);
bool verifyOrientedCut(const Digraph& g, const OrientedCut& cut);

// Arc indices per ear, in path order. The first ear is a circuit through
// startVertex; later ears are paths whose interior vertices are new.
struct EarDecomposition {
    int startVertex = 0;
    std::vector<std::vector<int>> ears;
};

EarDecomposition earDecompose(const Digraph& g, int startVertex);
bool verifyEarDecomposition(const Digraph& g, const EarDecomposition& ed);

using SpanningTree = std::vector<int>;  // n-1 arc indices

bool isSpanningTree(const Digraph& g, const SpanningTree& tree);

// Row i describes tree arc tree[i]; column j holds the signed incidence of arc
// j with the unique tree path from its tail to its head.
Mat networkMatrix(const Digraph& g, const SpanningTree& tree);

bool isMinimallyStronglyConnected(const Digraph& g);

// c triangles sharing one arc plus bi-directed trees hung on circuit vertices;
// yields 2n-3 arcs.
Digraph genMinScTwoNMinus3(int n, int c, const std::vector<int>& treeSizes, uint64_t seed);

// Two circuits overlapping in an elementary path of `overlap` arcs; yields n+1
// arcs.
Digraph genMinScNPlus1(int n, int overlap, uint64_t seed);

// Searches every spanning tree of g for one whose network matrix equals m up
// to column permutation.
std::optional<SpanningTree> verifySignIsNetworkMatrix(const Digraph& g, const Mat& m);

}  // namespace posspan
