#include "posspan/serialize.hpp"

namespace posspan {

Json ratVecToJson(const Vec& v) {
    Json a = Json::array();
    for (const Rat& t : v) a.push_back(formatRat(t));
    return a;
}

Vec ratVecFromJson(const Json& j) {
    Vec v;
    for (const auto& t : j) v.push_back(parseRat(t.get<std::string>()));
    return v;
}

Json matToJson(const Mat& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) entries.push_back(ratVecToJson(m.row(i)));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Mat matFromJson(const Json& j) {
    Mat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const Json& entries = j.at("entries");
    for (int i = 0; i < m.rows(); ++i) {
        Vec r = ratVecFromJson(entries.at(i));
        if (int(r.size()) != m.cols()) throw std::invalid_argument("row length mismatch");
        for (int c = 0; c < m.cols(); ++c) m.at(i, c) = r[c];
    }
    return m;
}

Json witnessToJson(const EquivWitness& w) {
    return Json{{"basis", matToJson(w.basis)},
                {"perm", w.perm},
                {"scale", ratVecToJson(w.scale)}};
}

EquivWitness witnessFromJson(const Json& j) {
    EquivWitness w;
    w.basis = matFromJson(j.at("basis"));
    w.perm = j.at("perm").get<std::vector<int>>();
    w.scale = ratVecFromJson(j.at("scale"));
    return w;
}

Json certificateToJson(const std::string& verdict, const std::string& kind, const Vec& values,
                       const std::optional<EquivWitness>& witness) {
    Json j{{"schema", 1},
           {"verdict", verdict},
           {"certificate", Json{{"kind", kind}, {"values", ratVecToJson(values)}}}};
    if (witness) j["witness"] = witnessToJson(*witness);
    return j;
}

ParsedCertificate certificateFromJson(const Json& j) {
    if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unknown schema");
    ParsedCertificate p;
    p.verdict = j.at("verdict").get<std::string>();
    p.kind = j.at("certificate").at("kind").get<std::string>();
    p.values = ratVecFromJson(j.at("certificate").at("values"));
    if (j.contains("witness")) p.witness = witnessFromJson(j.at("witness"));
    return p;
}

Json pssResultToJson(const PssResult& r) {
    if (r.pss) return certificateToJson("pss", "PositiveCombination", r.combination->x);
    return certificateToJson("notPss", "SeparatingVector", r.separating->y);
}

Json decompositionToJson(const Decomposition& d) {
    Json j{{"schema", 1}};
    if (const InForm* f = std::get_if<InForm>(&d)) {
        j["verdict"] = "in";
        j["form"] = Json{{"ell", f->ell},
                         {"k", f->k},
                         {"N", matToJson(f->N)},
                         {"X", matToJson(f->X)},
                         {"witness", witnessToJson(f->witness)}};
    } else {
        const InaForm& g = std::get<InaForm>(d);
        j["verdict"] = "ina";
        j["form"] = Json{{"ell", g.ell},
                         {"k", g.k},
                         {"acyclicCols", g.acyclicCols},
                         {"N", matToJson(g.N)},
                         {"X", matToJson(g.X)},
                         {"A", matToJson(g.A)},
                         {"acyclicWitness", ratVecToJson(g.acyclicWitness.y)},
                         {"witness", witnessToJson(g.witness)}};
    }
    return j;
}

Decomposition decompositionFromJson(const Json& j) {
    if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unknown schema");
    const Json& fj = j.at("form");
    if (j.at("verdict").get<std::string>() == "in") {
        InForm f;
        f.ell = fj.at("ell").get<int>();
        f.k = fj.at("k").get<int>();
        f.N = matFromJson(fj.at("N"));
        f.X = matFromJson(fj.at("X"));
        f.witness = witnessFromJson(fj.at("witness"));
        return f;
    }
    InaForm f;
    f.ell = fj.at("ell").get<int>();
    f.k = fj.at("k").get<int>();
    f.acyclicCols = fj.at("acyclicCols").get<int>();
    f.N = matFromJson(fj.at("N"));
    f.X = matFromJson(fj.at("X"));
    f.A = matFromJson(fj.at("A"));
    f.acyclicWitness.y = ratVecFromJson(fj.at("acyclicWitness"));
    f.witness = witnessFromJson(fj.at("witness"));
    return f;
}

Json posBasisReportToJson(const PosBasisReport& r) {
    Json j{{"schema", 1}, {"verdict", r.verdict}};
    switch (r.method) {
        case PbMethod::criticalStructure: j["method"] = "criticalStructure"; break;
        case PbMethod::removalOracle: j["method"] = "removalOracle"; break;
        case PbMethod::notPss: j["method"] = "notPss"; break;
    }
    if (r.notPssWitness)
        j["certificate"] = Json{{"kind", "SeparatingVector"},
                                {"values", ratVecToJson(r.notPssWitness->y)}};
    if (r.removableCol) {
        j["removableCol"] = *r.removableCol;
        j["certificate"] = Json{{"kind", "PositiveCombination"},
                                {"values", ratVecToJson(r.removalCertificate->x)}};
    }
    if (r.structure) {
        Json blocks = Json::array();
        for (const Mat& b : r.structure->blocks) blocks.push_back(matToJson(b));
        j["structure"] = Json{{"blockSizes", r.structure->blockSizes},
                              {"rowOffsets", r.structure->rowOffsets},
                              {"blocks", blocks}};
        j["blockCritical"] = r.blockCritical;
    }
    return j;
}

PosBasisReport posBasisReportFromJson(const Json& j) {
    if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unknown schema");
    PosBasisReport r;
    r.verdict = j.at("verdict").get<bool>();
    std::string m = j.at("method").get<std::string>();
    if (m == "criticalStructure")
        r.method = PbMethod::criticalStructure;
    else if (m == "removalOracle")
        r.method = PbMethod::removalOracle;
    else if (m == "notPss")
        r.method = PbMethod::notPss;
    else
        throw std::invalid_argument("unknown method");
    if (j.contains("certificate")) {
        Vec values = ratVecFromJson(j.at("certificate").at("values"));
        if (r.method == PbMethod::notPss)
            r.notPssWitness = SeparatingVector{values};
        else
            r.removalCertificate = PositiveCombination{values};
    }
    if (j.contains("removableCol")) r.removableCol = j.at("removableCol").get<int>();
    if (j.contains("structure")) {
        CriticalStructure cs;
        const Json& sj = j.at("structure");
        cs.blockSizes = sj.at("blockSizes").get<std::vector<int>>();
        cs.rowOffsets = sj.at("rowOffsets").get<std::vector<int>>();
        for (const auto& b : sj.at("blocks")) cs.blocks.push_back(matFromJson(b));
        r.structure = cs;
        r.blockCritical = j.at("blockCritical").get<std::vector<bool>>();
    }
    return r;
}

}  // namespace posspan
