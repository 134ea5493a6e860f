#include "posspan/digraph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

namespace posspan {

Digraph parseDigraph(std::istream& in) {
    Digraph g;
    int m;
    if (!(in >> g.n >> m)) throw std::invalid_argument("digraph header expected");
    if (g.n < 0 || m < 0) throw std::invalid_argument("negative digraph size");
    for (int i = 0; i < m; ++i) {
        int t, h;
        if (!(in >> t >> h)) throw std::invalid_argument("digraph arcs truncated");
        g.arcs.emplace_back(t, h);
    }
    checkDigraph(g);
    return g;
}

Digraph parseDigraphFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return parseDigraph(in);
}

std::string formatDigraph(const Digraph& g) {
    std::ostringstream out;
    out << g.n << " " << g.arcs.size() << "\n";
    for (const auto& [t, h] : g.arcs) out << t << " " << h << "\n";
    return out.str();
}

void checkDigraph(const Digraph& g) {
    for (const auto& [t, h] : g.arcs) {
        if (t < 0 || t >= g.n || h < 0 || h >= g.n)
            throw std::invalid_argument("arc endpoint out of range");
        if (t == h) throw std::invalid_argument("self-loop");
    }
}

namespace {

std::vector<std::vector<int>> outAdj(const Digraph& g, bool reversed) {
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [t, h] : g.arcs) adj[reversed ? h : t].push_back(reversed ? t : h);
    return adj;
}

std::vector<bool> reach(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<bool> seen(adj.size(), false);
    std::deque<int> q{src};
    seen[src] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                q.push_back(w);
            }
    }
    return seen;
}

}  // namespace

bool isWeaklyConnected(const Digraph& g) {
    if (g.n <= 1) return true;
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [t, h] : g.arcs) {
        adj[t].push_back(h);
        adj[h].push_back(t);
    }
    auto seen = reach(adj, 0);
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool isStronglyConnected(const Digraph& g) {
    if (g.n <= 1) return true;
    auto fwd = reach(outAdj(g, false), 0);
    if (!std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; })) return false;
    auto bwd = reach(outAdj(g, true), 0);
    return std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

std::optional<OrientedCut> findOrientedCut(const Digraph& g) {
    if (!isWeaklyConnected(g)) throw std::domain_error("digraph is not connected");
    if (isStronglyConnected(g)) return std::nullopt;
    auto adj = outAdj(g, false);
    for (int v = 0; v < g.n; ++v) {
        auto seen = reach(adj, v);
        if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) continue;
        OrientedCut cut;
        for (int u = 0; u < g.n; ++u) (seen[u] ? cut.v2 : cut.v1).push_back(u);
        for (int a = 0; a < int(g.arcs.size()); ++a)
            if (!seen[g.arcs[a].first] && seen[g.arcs[a].second]) cut.cutArcs.push_back(a);
        assert(verifyOrientedCut(g, cut));
        return cut;
    }
    throw std::logic_error("unreachable: no oriented cut in non-strongly-connected digraph");
}

bool verifyOrientedCut(const Digraph& g, const OrientedCut& cut) {
    std::vector<int> side(g.n, -1);
    for (int v : cut.v1) side[v] = 1;
    for (int v : cut.v2) side[v] = 2;
    if (cut.v1.empty() || cut.v2.empty()) return false;
    for (int v = 0; v < g.n; ++v)
        if (side[v] < 0) return false;
    std::vector<int> crossing;
    for (int a = 0; a < int(g.arcs.size()); ++a) {
        auto [t, h] = g.arcs[a];
        if (side[t] == 2 && side[h] == 1) return false;  // arc leaving v2
        if (side[t] == 1 && side[h] == 2) crossing.push_back(a);
    }
    std::vector<int> want = cut.cutArcs;
    std::sort(want.begin(), want.end());
    return want == crossing;
}

EarDecomposition earDecompose(const Digraph& g, int startVertex) {
    if (startVertex < 0 || startVertex >= g.n) throw std::invalid_argument("bad start vertex");
    if (!isStronglyConnected(g)) throw std::domain_error("digraph is not strongly connected");
    int m = int(g.arcs.size());
    EarDecomposition ed;
    ed.startVertex = startVertex;
    if (m == 0) return ed;

    // BFS parents over allowed vertices; returns arc indices of the path src..dst.
    auto bfsPath = [&](int src, const std::vector<bool>& allowed,
                       const std::vector<bool>& targets) -> std::vector<int> {
        std::vector<int> parentArc(g.n, -1), parentV(g.n, -1);
        std::vector<bool> seen(g.n, false);
        std::deque<int> q{src};
        seen[src] = true;
        int found = targets[src] ? src : -1;
        while (!q.empty() && found < 0) {
            int v = q.front();
            q.pop_front();
            for (int a = 0; a < m; ++a) {
                if (g.arcs[a].first != v) continue;
                int w = g.arcs[a].second;
                if (seen[w]) continue;
                if (!targets[w] && !allowed[w]) continue;
                seen[w] = true;
                parentArc[w] = a;
                parentV[w] = v;
                if (targets[w]) {
                    found = w;
                    break;
                }
                q.push_back(w);
            }
        }
        if (found < 0) throw std::logic_error("ear path search failed");
        std::vector<int> path;
        for (int v = found; v != src; v = parentV[v]) path.push_back(parentArc[v]);
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::vector<bool> inS(g.n, false);
    std::vector<bool> used(m, false);
    std::vector<bool> anywhere(g.n, true), onlyStart(g.n, false);
    onlyStart[startVertex] = true;

    // First ear: shortest circuit through the start vertex.
    {
        std::vector<bool> notStart = anywhere;
        notStart[startVertex] = false;
        int bestArc = -1;
        std::vector<int> bestPath;
        for (int a = 0; a < m; ++a) {
            if (g.arcs[a].second != startVertex) continue;
            if (g.arcs[a].first == startVertex) {
                bestArc = a;
                bestPath.clear();
                break;
            }
            std::vector<bool> target(g.n, false);
            target[g.arcs[a].first] = true;
            std::vector<int> p = bfsPath(startVertex, notStart, target);
            if (bestArc < 0 || p.size() < bestPath.size()) {
                bestArc = a;
                bestPath = p;
            }
        }
        std::vector<int> ear = bestPath;
        ear.push_back(bestArc);
        inS[startVertex] = true;
        for (int a : ear) {
            used[a] = true;
            inS[g.arcs[a].first] = inS[g.arcs[a].second] = true;
        }
        ed.ears.push_back(ear);
    }

    for (;;) {
        int pick = -1;
        for (int a = 0; a < m; ++a)
            if (!used[a] && inS[g.arcs[a].first]) {
                pick = a;
                break;
            }
        if (pick < 0) break;
        std::vector<int> ear{pick};
        int v = g.arcs[pick].second;
        if (!inS[v]) {
            std::vector<bool> allowed(g.n, false);
            for (int u = 0; u < g.n; ++u) allowed[u] = !inS[u];
            std::vector<int> p = bfsPath(v, allowed, inS);
            ear.insert(ear.end(), p.begin(), p.end());
        }
        for (int a : ear) {
            used[a] = true;
            inS[g.arcs[a].first] = inS[g.arcs[a].second] = true;
        }
        ed.ears.push_back(ear);
    }
    assert(verifyEarDecomposition(g, ed));
    return ed;
}

bool verifyEarDecomposition(const Digraph& g, const EarDecomposition& ed) {
    int m = int(g.arcs.size());
    std::vector<bool> used(m, false);
    std::vector<bool> inS(g.n, false);
    inS[ed.startVertex] = true;
    if (m == 0) return ed.ears.empty();
    if (ed.ears.empty()) return false;
    for (size_t e = 0; e < ed.ears.size(); ++e) {
        const auto& ear = ed.ears[e];
        if (ear.empty()) return false;
        for (int a : ear) {
            if (a < 0 || a >= m || used[a]) return false;
            used[a] = true;
        }
        int u1 = g.arcs[ear.front()].first;
        int uk = g.arcs[ear.back()].second;
        for (size_t i = 0; i + 1 < ear.size(); ++i)
            if (g.arcs[ear[i]].second != g.arcs[ear[i + 1]].first) return false;
        if (e == 0) {
            if (u1 != ed.startVertex || uk != ed.startVertex) return false;
        } else {
            if (!inS[u1] || !inS[uk]) return false;
        }
        // Interior vertices must be new and pairwise distinct.
        std::vector<int> interior;
        for (size_t i = 0; i + 1 < ear.size(); ++i) interior.push_back(g.arcs[ear[i]].second);
        std::vector<int> sorted = interior;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        for (int v : interior)
            if (inS[v]) return false;
        for (int a : ear) inS[g.arcs[a].first] = inS[g.arcs[a].second] = true;
    }
    return std::all_of(used.begin(), used.end(), [](bool b) { return b; }) &&
           std::all_of(inS.begin(), inS.end(), [](bool b) { return b; });
}

bool isSpanningTree(const Digraph& g, const SpanningTree& tree) {
    if (int(tree.size()) != g.n - 1) return false;
    std::vector<bool> seenArc(g.arcs.size(), false);
    std::vector<std::vector<int>> adj(g.n);
    for (int a : tree) {
        if (a < 0 || a >= int(g.arcs.size()) || seenArc[a]) return false;
        seenArc[a] = true;
        adj[g.arcs[a].first].push_back(g.arcs[a].second);
        adj[g.arcs[a].second].push_back(g.arcs[a].first);
    }
    if (g.n == 0) return false;
    auto seen = reach(adj, 0);
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Mat networkMatrix(const Digraph& g, const SpanningTree& tree) {
    if (!isSpanningTree(g, tree)) throw std::invalid_argument("not a spanning tree");
    int n = g.n, m = int(g.arcs.size());
    // adjacency with (neighbor, tree row, +1 if traversed in arc direction)
    std::vector<std::vector<std::tuple<int, int, int>>> adj(n);
    for (int i = 0; i < n - 1; ++i) {
        auto [t, h] = g.arcs[tree[i]];
        adj[t].emplace_back(h, i, 1);
        adj[h].emplace_back(t, i, -1);
    }
    Mat out(n - 1, m);
    for (int j = 0; j < m; ++j) {
        auto [src, dst] = g.arcs[j];
        std::vector<int> prevV(n, -1), prevRow(n, -1), prevSign(n, 0);
        std::vector<bool> seen(n, false);
        std::deque<int> q{src};
        seen[src] = true;
        while (!q.empty() && !seen[dst]) {
            int v = q.front();
            q.pop_front();
            for (auto [w, row, sgn] : adj[v]) {
                if (seen[w]) continue;
                seen[w] = true;
                prevV[w] = v;
                prevRow[w] = row;
                prevSign[w] = sgn;
                q.push_back(w);
            }
        }
        for (int v = dst; v != src; v = prevV[v]) out.at(prevRow[v], j) = prevSign[v];
    }
    return out;
}

bool isMinimallyStronglyConnected(const Digraph& g) {
    if (!isStronglyConnected(g)) return false;
    for (size_t a = 0; a < g.arcs.size(); ++a) {
        Digraph h = g;
        h.arcs.erase(h.arcs.begin() + a);
        if (isStronglyConnected(h)) return false;
    }
    return true;
}

Digraph genMinScTwoNMinus3(int n, int c, const std::vector<int>& treeSizes, uint64_t seed) {
    int extra = n - 2 - c;
    if (c < 1 || extra < 0 || std::accumulate(treeSizes.begin(), treeSizes.end(), 0) != extra)
        throw std::invalid_argument("inconsistent parameters for the 2n-3 family");
    for (int s : treeSizes)
        if (s <= 0) throw std::invalid_argument("tree sizes must be positive");
    std::mt19937_64 rng(seed);
    Digraph g;
    g.n = n;
    g.arcs.emplace_back(0, 1);  // shared arc u -> v
    for (int i = 0; i < c; ++i) {
        g.arcs.emplace_back(1, 2 + i);
        g.arcs.emplace_back(2 + i, 0);
    }
    int next = 2 + c;
    for (size_t t = 0; t < treeSizes.size(); ++t) {
        int anchor = int(t % size_t(2 + c));
        std::vector<int> nodes{anchor};
        for (int i = 0; i < treeSizes[t]; ++i) {
            int parent = nodes[std::uniform_int_distribution<size_t>(0, nodes.size() - 1)(rng)];
            g.arcs.emplace_back(parent, next);
            g.arcs.emplace_back(next, parent);
            nodes.push_back(next);
            ++next;
        }
    }
    assert(int(g.arcs.size()) == 2 * n - 3);
    assert(isMinimallyStronglyConnected(g));
    return g;
}

Digraph genMinScNPlus1(int n, int overlap, uint64_t seed) {
    int rest = n - 1 - overlap;
    // Each return path needs a new vertex, else its last arc is removable.
    if (n < 3 || overlap < 0 || rest < 2)
        throw std::invalid_argument("inconsistent parameters for the n+1 family");
    std::mt19937_64 rng(seed);
    int a = std::uniform_int_distribution<int>(1, rest - 1)(rng);
    int b = rest - a;
    Digraph g;
    g.n = n;
    // shared path 0 -> 1 -> ... -> overlap
    for (int i = 0; i < overlap; ++i) g.arcs.emplace_back(i, i + 1);
    auto addReturn = [&](int firstNew, int len) {
        int prev = overlap;
        for (int i = 0; i < len; ++i) {
            g.arcs.emplace_back(prev, firstNew + i);
            prev = firstNew + i;
        }
        g.arcs.emplace_back(prev, 0);
    };
    addReturn(overlap + 1, a);
    addReturn(overlap + 1 + a, b);
    assert(int(g.arcs.size()) == n + 1);
    assert(isMinimallyStronglyConnected(g));
    return g;
}

std::optional<SpanningTree> verifySignIsNetworkMatrix(const Digraph& g, const Mat& m) {
    int n = g.n, arcs = int(g.arcs.size());
    if (m.rows() != n - 1 || m.cols() != arcs) return std::nullopt;
    auto sortedCols = [](const Mat& mm) {
        std::vector<Vec> cols;
        for (int j = 0; j < mm.cols(); ++j) cols.push_back(mm.col(j));
        std::sort(cols.begin(), cols.end());
        return cols;
    };
    auto target = sortedCols(m);
    std::vector<int> pick(n - 1);
    std::function<std::optional<SpanningTree>(int, int)> go = [&](int idx,
                                                                  int from) -> std::optional<SpanningTree> {
        if (idx == n - 1) {
            SpanningTree t(pick.begin(), pick.end());
            if (!isSpanningTree(g, t)) return std::nullopt;
            if (sortedCols(networkMatrix(g, t)) == target) return t;
            return std::nullopt;
        }
        for (int a = from; a < arcs; ++a) {
            pick[idx] = a;
            if (auto r = go(idx + 1, a + 1)) return r;
        }
        return std::nullopt;
    };
    return go(0, 0);
}

}  // namespace posspan
