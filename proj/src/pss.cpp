#include "posspan/pss.hpp"

#include <cassert>

#include "posspan/simplex.hpp"

namespace posspan {

StiemkeResult stiemkeAlternative(const Mat& d) {
    int m = d.cols();
    // x > 0 with D x = 0 is scale-invariant, so search x = 1 + u, u >= 0.
    Vec ones(m, Rat(1));
    Vec b = d.mulVec(ones);
    for (auto& v : b) v = -v;
    Phase1Result r = phase1(d, b);
    StiemkeResult out;
    if (r.feasible) {
        Vec x(m);
        for (int j = 0; j < m; ++j) x[j] = Rat(1) + r.point[j];
        out.positive = PositiveCombination{normalizeMinToOne(x)};
        assert(verifyPositiveCombination(d, *out.positive));
    } else {
        Vec y = r.dual;
        for (auto& v : y) v = -v;
        out.separating = SeparatingVector{normalizeIntegerDirection(y)};
        assert(verifySeparatingVector(d, *out.separating, true));
    }
    return out;
}

PssResult isPss(const Mat& d) {
    StiemkeResult s = stiemkeAlternative(d);
    if (s.positive) return {true, s.positive, std::nullopt};
    return {false, std::nullopt, s.separating};
}

PssResult isPssFullSpace(const Mat& d) {
    PssResult r = isPss(d);
    if (!r.pss) return r;
    if (rank(d) == d.rows()) return r;
    Vec y = normalizeIntegerDirection(leftNullVector(d));
    // y^T D = 0 here, so the sign is free; fix it for determinism.
    for (const Rat& v : y) {
        if (v == 0) continue;
        if (v < 0)
            for (Rat& t : y) t = -t;
        break;
    }
    SeparatingVector s{y};
    assert(verifySeparatingVector(d, s, false));
    return {false, std::nullopt, s};
}

GordanResult gordanAlternative(const Mat& a) {
    int n = a.rows(), m = a.cols();
    GordanResult out;
    if (m == 0) {
        out.gordan = GordanVector{Vec(n, Rat(1))};
        return out;
    }
    // y^T A >= 1 with y free: A^T p - A^T q - s = 1, p, q, s >= 0.
    Mat at = a.transpose();
    Mat e(m, 2 * n + m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            e.at(i, j) = at.at(i, j);
            e.at(i, n + j) = -at.at(i, j);
        }
        e.at(i, 2 * n + i) = -1;
    }
    Phase1Result r = phase1(e, Vec(m, Rat(1)));
    if (r.feasible) {
        Vec y(n);
        for (int j = 0; j < n; ++j) y[j] = r.point[j] - r.point[n + j];
        out.gordan = GordanVector{y};
        assert(verifyGordanVector(a, *out.gordan));
    } else {
        Vec x = normalizeIntegerDirection(r.dual);
        for (const auto& v : x) assert(v >= 0);
        assert(isZeroVec(a.mulVec(x)) && !isZeroVec(x));
        out.nullCombination = x;
    }
    return out;
}

bool isAcyclic(const Mat& a) { return gordanAlternative(a).gordan.has_value(); }

EquivWitness acyclicPositiveForm(const Mat& a, const GordanVector& g) {
    if (!verifyGordanVector(a, g)) throw std::invalid_argument("invalid acyclicity certificate");
    int n = a.rows(), m = a.cols();
    Vec prod = a.mulLeft(g.y);
    Rat minProd = m ? prod[0] : Rat(1);
    for (const auto& v : prod)
        if (v < minProd) minProd = v;
    Rat maxColSum = 0;
    for (int j = 0; j < m; ++j) {
        Rat s = 0;
        for (int i = 0; i < n; ++i) s += ratAbs(a.at(i, j));
        if (s > maxColSum) maxColSum = s;
    }
    Rat eta = minProd / (2 * (maxColSum + 1));
    for (;;) {
        // binv = 1 y^T + eta I, so row i of binv*A is y^T A + eta * (row i of A).
        Mat binv(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) binv.at(i, j) = g.y[j];
            binv.at(i, i) += eta;
        }
        try {
            Mat basis = inverse(binv);
            Mat pos = binv * a;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < m && ok; ++j)
                    if (pos.at(i, j) <= 0) ok = false;
            if (ok) {
                EquivWitness w = EquivWitness::identity(n, m);
                w.basis = basis;
                return w;
            }
        } catch (const std::domain_error&) {
        }
        eta /= 2;
    }
}

std::optional<Circuit> findCircuit(const Mat& a) {
    GordanResult g = gordanAlternative(a);
    if (g.gordan) return std::nullopt;
    std::vector<int> support;
    for (int j = 0; j < a.cols(); ++j)
        if ((*g.nullCombination)[j] != 0) support.push_back(j);
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (size_t drop = 0; drop < support.size(); ++drop) {
            std::vector<int> cand;
            for (size_t i = 0; i < support.size(); ++i)
                if (i != drop) cand.push_back(support[i]);
            GordanResult sub = gordanAlternative(a.selectCols(cand));
            if (!sub.gordan) {
                std::vector<int> next;
                for (size_t i = 0; i < cand.size(); ++i)
                    if ((*sub.nullCombination)[i] != 0) next.push_back(cand[i]);
                support = next;
                shrunk = true;
                break;
            }
        }
    }
    StiemkeResult st = stiemkeAlternative(a.selectCols(support));
    assert(st.positive);
    return Circuit{support, st.positive->x};
}

bool isCircuit(const Mat& d) {
    if (d.cols() == 0) return false;
    if (!stiemkeAlternative(d).positive) return false;
    for (int j = 0; j < d.cols(); ++j)
        if (!isAcyclic(d.dropCol(j))) return false;
    assert(d.cols() == rank(d) + 1);
    return true;
}

EquivWitness circuitCanonicalWitness(const Mat& a, const Circuit& c) {
    int n = a.rows(), m = a.cols();
    int ell = int(c.cols.size()) - 1;
    std::vector<Vec> bcols;
    for (int i = 0; i < ell; ++i) {
        Vec v = a.col(c.cols[i]);
        for (auto& x : v) x *= c.combination[i];
        bcols.push_back(v);
    }
    // Complete to a basis with unit vectors.
    for (int r = 0; r < n && int(bcols.size()) < n; ++r) {
        Vec e(n, Rat(0));
        e[r] = 1;
        bcols.push_back(e);
        if (rank(Mat::fromCols(bcols)) < int(bcols.size())) bcols.pop_back();
    }
    EquivWitness w;
    w.basis = Mat::fromCols(bcols);
    std::vector<bool> inC(m, false);
    for (int j : c.cols) inC[j] = true;
    w.perm = c.cols;
    for (int j = 0; j < m; ++j)
        if (!inC[j]) w.perm.push_back(j);
    w.scale.assign(m, Rat(1));
    for (int i = 0; i <= ell; ++i) w.scale[i] = c.combination[i];
    return w;
}

NonAcyclicWitness nonAcyclicWitness(const Mat& a) {
    for (int j = 0; j < a.cols(); ++j)
        if (a.isZeroCol(j)) return ZeroColumn{j};
    auto c = findCircuit(a);
    if (!c) throw std::domain_error("matrix is acyclic");
    EquivWitness w = circuitCanonicalWitness(a, *c);
    int ell = int(c->cols.size()) - 1;
    Mat canon = applyEquiv(a, w);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < ell; ++j) assert(canon.at(i, j) == (i == j ? 1 : 0));
        assert(canon.at(i, ell) == (i < ell ? -1 : 0));
    }
    return CircuitForm{ell, w};
}

CanonicalPssForm canonicalPssForm(const Mat& d) {
    StiemkeResult st = stiemkeAlternative(d);
    if (!st.positive) throw std::domain_error("not a PSS of its span");
    const Vec& x = st.positive->x;
    int n = d.rows(), m = d.cols();
    auto rr = rref(d);
    int ell = int(rr.pivots.size());
    std::vector<Vec> bcols;
    for (int i = 0; i < ell; ++i) {
        Vec v = d.col(rr.pivots[i]);
        for (auto& e : v) e *= x[rr.pivots[i]];
        bcols.push_back(v);
    }
    for (int r = 0; r < n && int(bcols.size()) < n; ++r) {
        Vec e(n, Rat(0));
        e[r] = 1;
        bcols.push_back(e);
        if (rank(Mat::fromCols(bcols)) < int(bcols.size())) bcols.pop_back();
    }
    CanonicalPssForm out;
    out.ell = ell;
    out.witness.basis = Mat::fromCols(bcols);
    std::vector<bool> piv(m, false);
    for (int j : rr.pivots) piv[j] = true;
    out.witness.perm = rr.pivots;
    for (int j = 0; j < m; ++j)
        if (!piv[j]) out.witness.perm.push_back(j);
    out.witness.scale.resize(m);
    for (int j = 0; j < m; ++j) out.witness.scale[j] = x[out.witness.perm[j]];
    Mat canon = applyEquiv(d, out.witness);
    Vec sum(ell, Rat(0));
    for (int j = ell; j < m; ++j) {
        Vec v(ell);
        for (int i = 0; i < ell; ++i) v[i] = canon.at(i, j);
        for (int i = ell; i < n; ++i) assert(canon.at(i, j) == 0);
        for (int i = 0; i < ell; ++i) sum[i] += v[i];
        out.v.push_back(v);
    }
    for (const auto& s : sum) assert(s == -1);
    return out;
}

}  // namespace posspan
