#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "posspan/digraph.hpp"
#include "posspan/serialize.hpp"

using namespace posspan;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(outPath);
    if (!out) throw std::invalid_argument("cannot write " + outPath);
    out << text << "\n";
}

std::vector<int> parseTreeFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::vector<int> tree;
    int a;
    while (in >> a) tree.push_back(a);
    return tree;
}

int cmdCheckPss(const std::string& file, bool json, const std::string& out) {
    Mat d = parseMatFile(file);
    PssResult r = isPssFullSpace(d);
    if (json)
        emit(pssResultToJson(r).dump(2), out);
    else if (r.pss)
        emit("positively spans R^" + std::to_string(d.rows()), out);
    else
        emit("does not positively span R^" + std::to_string(d.rows()), out);
    return r.pss ? kExitYes : kExitNo;
}

int cmdDecompose(const std::string& file, bool json, const std::string& out) {
    Mat d = parseMatFile(file);
    Decomposition dec = decomposeInIna(d);
    if (!verifyDecomposition(d, dec)) throw std::logic_error("decomposition failed to verify");
    bool in = std::holds_alternative<InForm>(dec);
    if (json)
        emit(decompositionToJson(dec).dump(2), out);
    else
        emit(in ? "identity-staircase form (positively spanning)"
                : "form with acyclic tail (not positively spanning)",
             out);
    return in ? kExitYes : kExitNo;
}

int cmdGraph(const std::string& file, const std::string& action, const std::string& treeFile,
             bool json, const std::string& out) {
    Digraph g = parseDigraphFile(file);
    if (action == "check") {
        bool sc = isStronglyConnected(g);
        if (json)
            emit(Json{{"schema", 1},
                      {"stronglyConnected", sc},
                      {"weaklyConnected", isWeaklyConnected(g)}}
                     .dump(2),
                 out);
        else
            emit(sc ? "strongly connected" : "not strongly connected", out);
        return sc ? kExitYes : kExitNo;
    }
    if (action == "ears") {
        if (!isStronglyConnected(g)) {
            emit(json ? Json{{"schema", 1}, {"error", "not strongly connected"}}.dump(2)
                      : "not strongly connected",
                 out);
            return kExitNo;
        }
        EarDecomposition ed = earDecompose(g, 0);
        if (!verifyEarDecomposition(g, ed)) throw std::logic_error("ears failed to verify");
        if (json)
            emit(Json{{"schema", 1}, {"startVertex", ed.startVertex}, {"ears", ed.ears}}.dump(2),
                 out);
        else {
            std::string s = std::to_string(ed.ears.size()) + " ears:";
            for (const auto& ear : ed.ears) {
                s += " (";
                for (size_t i = 0; i < ear.size(); ++i)
                    s += (i ? " " : "") + std::to_string(ear[i]);
                s += ")";
            }
            emit(s, out);
        }
        return kExitYes;
    }
    if (action == "cut") {
        auto cut = findOrientedCut(g);
        if (!cut) {
            emit(json ? Json{{"schema", 1}, {"cut", nullptr}}.dump(2) : "no oriented cut", out);
            return kExitNo;
        }
        if (json)
            emit(Json{{"schema", 1}, {"v1", cut->v1}, {"v2", cut->v2}, {"cutArcs", cut->cutArcs}}
                     .dump(2),
                 out);
        else {
            std::string s = "cut arcs:";
            for (int a : cut->cutArcs) s += " " + std::to_string(a);
            emit(s, out);
        }
        return kExitYes;
    }
    if (action == "netmat") {
        if (treeFile.empty()) throw CLI::ValidationError("netmat requires --tree");
        SpanningTree tree = parseTreeFile(treeFile);
        if (!isSpanningTree(g, tree)) throw std::invalid_argument("not a spanning tree");
        Mat m = networkMatrix(g, tree);
        if (json)
            emit(Json{{"schema", 1}, {"matrix", matToJson(m)}}.dump(2), out);
        else
            emit(formatMat(m), out);
        return kExitYes;
    }
    if (action == "minimal") {
        bool minimal = isMinimallyStronglyConnected(g);
        if (json)
            emit(Json{{"schema", 1}, {"minimallyStronglyConnected", minimal}}.dump(2), out);
        else
            emit(minimal ? "minimally strongly connected" : "not minimally strongly connected",
                 out);
        return minimal ? kExitYes : kExitNo;
    }
    throw CLI::ValidationError("unknown action " + action);
}

int cmdBasis(const std::string& file, bool json, const std::string& out) {
    Mat d = parseMatFile(file);
    PosBasisReport r = isPositiveBasis(d);
    if (json)
        emit(posBasisReportToJson(r).dump(2), out);
    else
        emit(r.verdict ? "positive basis" : "not a positive basis", out);
    return r.verdict ? kExitYes : kExitNo;
}

int cmdGenerate(const std::string& family, int l, int n, int k, int c, int overlap, uint64_t seed,
                bool json, const std::string& out) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 0);
    std::string payload;
    if (family == "min-pb" || family == "max-pb" || family == "pb-2l-1" || family == "pb-l-2") {
        if (n < l) n = l;
        Mat d;
        if (family == "min-pb")
            d = genMinimalPb(l, n);
        else if (family == "max-pb")
            d = genMaximalPb(l, n);
        else if (family == "pb-2l-1") {
            Vec x(size_t(std::max(0, l - 2)));
            for (Rat& t : x) t = entry(rng);
            d = genPb2lMinus1(l, n, x);
        } else {
            if (k < 1) k = 1 + int(rng() % uint64_t(std::max(1, l - 1)));
            Vec x(size_t(k), Rat(0));
            for (int i = 1; i < k; ++i) x[i] = entry(rng);
            d = genPbLPlus2(l, n, k, x);
        }
        if (!isPositiveBasis(d).verdict) throw std::logic_error("generator output failed verification");
        payload = formatMat(d);
    } else if (family == "digraph-2n-3" || family == "digraph-n-1") {
        Digraph g;
        if (family == "digraph-2n-3") {
            if (c < 1) c = 1 + int(rng() % uint64_t(std::max(1, n - 2)));
            int extra = n - 2 - c;
            std::vector<int> trees;
            while (extra > 0) {
                int s = 1 + int(rng() % uint64_t(extra));
                trees.push_back(s);
                extra -= s;
            }
            g = genMinScTwoNMinus3(n, c, trees, rng());
        } else {
            if (overlap < 0) overlap = int(rng() % uint64_t(std::max(1, n - 2)));
            g = genMinScNPlus1(n, overlap, rng());
        }
        if (!isMinimallyStronglyConnected(g))
            throw std::logic_error("generator output failed verification");
        payload = formatDigraph(g);
    } else {
        throw CLI::ValidationError("unknown family " + family);
    }
    if (json) {
        emit(Json{{"schema", 1}, {"family", family}, {"seed", seed}, {"payload", payload}}.dump(2),
             out);
    } else {
        emit(payload, out);
    }
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for positive spanning sets and strongly connected digraphs"};
    app.require_subcommand(1);
    bool json = false;
    std::string out, file, tree, action = "check", family;
    int l = 2, n = 4, k = -1, c = -1, overlap = -1;
    uint64_t seed = 0;
    auto* checkPss = app.add_subcommand("check-pss", "does the matrix positively span R^n?");
    checkPss->add_option("file", file)->required();
    auto* decompose = app.add_subcommand("decompose", "identity-staircase/acyclic decomposition");
    decompose->add_option("file", file)->required();
    auto* graph = app.add_subcommand("graph", "digraph checks");
    graph->add_option("file", file)->required();
    graph->add_option("--action", action)
        ->check(CLI::IsMember({"check", "ears", "cut", "netmat", "minimal"}));
    graph->add_option("--tree", tree, "spanning tree file (arc indices)");
    auto* basis = app.add_subcommand("basis", "is the matrix a positive basis of its span?");
    basis->add_option("file", file)->required();
    auto* generate = app.add_subcommand("generate", "emit a verified family member");
    generate->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"min-pb", "max-pb", "pb-2l-1", "pb-l-2", "digraph-2n-3",
                               "digraph-n-1"}));
    generate->add_option("--l", l, "span dimension for basis families");
    generate->add_option("--n", n, "ambient dimension / vertex count");
    generate->add_option("--k", k, "first block size for pb-l-2");
    generate->add_option("--c", c, "triangle count for digraph-2n-3");
    generate->add_option("--overlap", overlap, "shared path length for digraph-n-1");
    generate->add_option("--seed", seed, "seed for free entries");

    for (auto* sub : {checkPss, decompose, graph, basis, generate}) {
        sub->add_flag("--json", json, "emit JSON instead of plain text");
        sub->add_option("--out", out, "write output to a file instead of stdout");
    }

    try {
        app.parse(argc, argv);
        if (checkPss->parsed()) return cmdCheckPss(file, json, out);
        if (decompose->parsed()) return cmdDecompose(file, json, out);
        if (graph->parsed()) return cmdGraph(file, action, tree, json, out);
        if (basis->parsed()) return cmdBasis(file, json, out);
        if (generate->parsed()) return cmdGenerate(family, l, n, k, c, overlap, seed, json, out);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
