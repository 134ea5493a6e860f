#include "posspan/posbasis.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace posspan {

CriticalVerdict isCriticalVector(const Vec& v) {
    if (v.empty()) throw std::invalid_argument("empty vector");
    Rat mx = v[0];
    for (const Rat& t : v) mx = std::max(mx, t);
    CriticalVerdict out;
    if (mx == 0) {
        out.isCritical = true;
        out.cone = Cone::single;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] == 0) {
                out.i = int(i) + 1;
                break;
            }
        return out;
    }
    if (mx < 0) return out;
    std::vector<int> arg;
    for (size_t i = 0; i < v.size() && arg.size() < 2; ++i)
        if (v[i] == mx) arg.push_back(int(i) + 1);
    if (arg.size() < 2) return out;
    out.isCritical = true;
    out.cone = Cone::pair;
    out.i = arg[0];
    out.j = arg[1];
    return out;
}

bool replacementOracle(const Vec& v) {
    if (v.empty()) throw std::invalid_argument("empty vector");
    int n = int(v.size());
    Mat base = genMinimalPb(n, n);
    for (int k = 0; k <= n; ++k) {
        Mat m = base;
        m.setCol(k, v);
        if (isPssFullSpace(m).pss) return false;
    }
    return true;
}

CriticalStructure criticalStructure(const InForm& f) {
    if (f.ell != f.N.rows() || f.X.cols() != 0)
        throw std::invalid_argument("need a square identity part and no tail");
    std::optional<NemShape> shape = validateNem(f.N);
    if (!shape) throw std::invalid_argument("malformed echelon block");
    int n = shape->n, s = shape->s;
    CriticalStructure cs;
    for (int j = 0; j < s; ++j) {
        cs.rowOffsets.push_back(shape->z[j] - 1);
        cs.blockSizes.push_back(j + 1 < s ? shape->z[j + 1] - shape->z[j]
                                          : n + 1 - shape->z[s - 1]);
    }
    for (int i = 0; i + 1 < s; ++i) {
        Mat x(cs.blockSizes[i], s - 1 - i);
        for (int r = 0; r < x.rows(); ++r)
            for (int t = 0; t < x.cols(); ++t)
                x.at(r, t) = f.N.at(cs.rowOffsets[i] + r, i + 1 + t);
        cs.blocks.push_back(x);
    }
    assert(reassembleCriticalStructure(n, cs) == f.N);
    return cs;
}

Mat reassembleCriticalStructure(int n, const CriticalStructure& cs) {
    int s = int(cs.blockSizes.size());
    Mat nem(n, s);
    for (int j = 0; j < s; ++j)
        for (int r = 0; r < cs.blockSizes[j]; ++r)
            nem.at(cs.rowOffsets[j] + r, j) = -1;
    for (int i = 0; i + 1 < s; ++i)
        for (int r = 0; r < cs.blocks[i].rows(); ++r)
            for (int t = 0; t < cs.blocks[i].cols(); ++t)
                nem.at(cs.rowOffsets[i] + r, i + 1 + t) = cs.blocks[i].at(r, t);
    return nem;
}

bool isCriticalMatrixLowDim(const Mat& x) {
    if (x.rows() == 1) {
        for (int j = 0; j < x.cols(); ++j)
            if (x.at(0, j) != 0) return false;
        return true;
    }
    if (x.rows() != 2) throw std::invalid_argument("only one or two rows supported");
    bool k1 = true, k2 = true, k12 = true;
    for (int j = 0; j < x.cols(); ++j) {
        const Rat& a = x.at(0, j);
        const Rat& b = x.at(1, j);
        k1 = k1 && a == 0 && b <= 0;
        k2 = k2 && a <= 0 && b == 0;
        k12 = k12 && a == b && a >= 0;
    }
    return k1 || k2 || k12;
}

PosBasisReport positiveBasisByRemoval(const Mat& d) {
    if (d.rows() == 0 || d.cols() == 0) throw std::invalid_argument("empty matrix");
    PosBasisReport rep;
    StiemkeResult st = stiemkeAlternative(d);
    if (st.separating) {
        rep.method = PbMethod::notPss;
        rep.notPssWitness = st.separating;
        return rep;
    }
    rep.method = PbMethod::removalOracle;
    int ell = rank(d);
    for (int j = 0; j < d.cols(); ++j) {
        Mat dj = d.dropCol(j);
        if (rank(dj) != ell) continue;
        StiemkeResult stj = stiemkeAlternative(dj);
        if (stj.positive) {
            rep.removableCol = j;
            rep.removalCertificate = stj.positive;
            return rep;
        }
    }
    rep.verdict = true;
    return rep;
}

PosBasisReport isPositiveBasis(const Mat& d) {
    if (d.rows() == 0 || d.cols() == 0) throw std::invalid_argument("empty matrix");
    StiemkeResult st = stiemkeAlternative(d);
    if (st.separating) {
        PosBasisReport rep;
        rep.method = PbMethod::notPss;
        rep.notPssWitness = st.separating;
        return rep;
    }
    int ell = rank(d);
    if (ell == 0) return positiveBasisByRemoval(d);
    Mat dred = d;
    if (ell < d.rows()) dred = rref(d).rref.subMatrix(0, ell, 0, d.cols());
    Decomposition dec = decomposeInIna(dred);
    const InForm& f = std::get<InForm>(dec);
    if (f.X.cols() > 0) {
        // [I N] alone spans positively, so some column is removable.
        PosBasisReport rep = positiveBasisByRemoval(d);
        assert(!rep.verdict);
        return rep;
    }
    CriticalStructure cs = criticalStructure(f);
    bool lowDim = true;
    for (int sz : cs.blockSizes) lowDim = lowDim && sz <= 2;
    if (!lowDim) return positiveBasisByRemoval(d);
    PosBasisReport rep;
    rep.method = PbMethod::criticalStructure;
    rep.structure = cs;
    rep.verdict = true;
    for (const Mat& x : cs.blocks) {
        bool ok = isCriticalMatrixLowDim(x);
        rep.blockCritical.push_back(ok);
        rep.verdict = rep.verdict && ok;
    }
    return rep;
}

namespace {

// Basis step B with B^{-1} M = (rows r and r+1 replaced by
// row_r - row_{r+1} and -row_{r+1}); the step matrix is its own inverse.
EquivWitness negAddStep(int n, int m, int r) {
    EquivWitness w = EquivWitness::identity(n, m);
    w.basis.at(r, r) = 1;
    w.basis.at(r, r + 1) = -1;
    w.basis.at(r + 1, r) = 0;
    w.basis.at(r + 1, r + 1) = -1;
    return w;
}

EquivWitness rowSwapStep(int n, int m, int r1, int r2, bool swapIdCols) {
    EquivWitness w = EquivWitness::identity(n, m);
    std::swap(w.basis.at(r1, r1), w.basis.at(r1, r2));
    std::swap(w.basis.at(r2, r2), w.basis.at(r2, r1));
    if (swapIdCols) std::swap(w.perm[r1], w.perm[r2]);
    return w;
}

EquivWitness colSwapStep(int n, int m, int c1, int c2) {
    EquivWitness w = EquivWitness::identity(n, m);
    std::swap(w.perm[c1], w.perm[c2]);
    return w;
}

}  // namespace

std::pair<InForm, CriticalStructure> normalizeTwoRowBlocks(const InForm& f,
                                                           const CriticalStructure& cs) {
    int n = f.ell, s = f.k, m = n + s;
    if (f.N.rows() != n || f.X.cols() != 0)
        throw std::invalid_argument("need a square identity part and no tail");
    Mat cur = reassembleIn(n, f);
    EquivWitness acc = EquivWitness::identity(n, m);
    auto step = [&](const EquivWitness& w) {
        cur = applyEquiv(cur, w);
        acc = composeEquiv(acc, w);
    };
    // Fixing a block only rewrites rows above it, so walk bottom-up.
    for (int b = s - 1; b >= 0; --b) {
        if (cs.blockSizes[b] != 2) continue;
        int r = 0;
        {
            std::optional<NemShape> shape = validateNem(cur.subMatrix(0, n, n, m));
            assert(shape);
            r = shape->z[b] - 1;
        }
        bool k1 = true, k2 = true, k12 = true;
        for (int c = b + 1; c < s; ++c) {
            const Rat& a = cur.at(r, n + c);
            const Rat& bb = cur.at(r + 1, n + c);
            k1 = k1 && a == 0 && bb <= 0;
            k2 = k2 && a <= 0 && bb == 0;
            k12 = k12 && a == bb && a >= 0;
        }
        if (k1) continue;
        if (k2) {
            step(rowSwapStep(n, m, r, r + 1, true));
            continue;
        }
        if (!k12) throw std::domain_error("two-row block not confined to a single cone");
        step(negAddStep(n, m, r));
        step(colSwapStep(n, m, r + 1, n + b));
        // Clear the crosses the swapped-in unit column carries above the block.
        EquivWitness clr = EquivWitness::identity(n, m);
        for (int q = 0; q < r; ++q) clr.basis.at(q, r + 1) = cur.at(q, r + 1);
        step(clr);
    }
    assert(cur.subMatrix(0, n, 0, n) == Mat::identity(n));
    InForm out;
    out.ell = n;
    out.k = s;
    out.N = cur.subMatrix(0, n, n, m);
    out.X = Mat(n, 0);
    out.witness = composeEquiv(f.witness, acc);
    return {out, criticalStructure(out)};
}

Mat genMinimalPb(int ell, int n) {
    if (ell < 1 || ell > n) throw std::invalid_argument("need 1 <= l <= n");
    Mat d(n, ell + 1);
    for (int i = 0; i < ell; ++i) {
        d.at(i, i) = 1;
        d.at(i, ell) = -1;
    }
    return d;
}

Mat genMaximalPb(int ell, int n) {
    if (ell < 1 || ell > n) throw std::invalid_argument("need 1 <= l <= n");
    Mat d(n, 2 * ell);
    for (int i = 0; i < ell; ++i) {
        d.at(i, i) = 1;
        d.at(i, ell + i) = -1;
    }
    return d;
}

Mat genPb2lMinus1(int ell, int n, const Vec& x) {
    if (ell < 2 || ell > n) throw std::invalid_argument("need 2 <= l <= n");
    if (int(x.size()) != ell - 2) throw std::invalid_argument("need l - 2 free entries");
    for (const Rat& t : x)
        if (t > 0) throw std::invalid_argument("free entries must be non-positive");
    Mat d(n, 2 * ell - 1);
    for (int i = 0; i < ell; ++i) d.at(i, i) = 1;
    d.at(0, ell) = -1;
    d.at(1, ell) = -1;
    for (int j = 1; j <= ell - 2; ++j) {
        d.at(1, ell + j) = x[j - 1];
        d.at(j + 1, ell + j) = -1;
    }
    return d;
}

Mat genPbLPlus2(int ell, int n, int k, const Vec& x) {
    if (ell < 2 || ell > n) throw std::invalid_argument("need 2 <= l <= n");
    if (k < 1 || k > ell - 1) throw std::invalid_argument("need 1 <= k <= l - 1");
    if (int(x.size()) != k) throw std::invalid_argument("need k free entries");
    if (x[0] != 0) throw std::invalid_argument("first free entry must be zero");
    for (const Rat& t : x)
        if (t > 0) throw std::invalid_argument("free entries must be non-positive");
    Mat d(n, ell + 2);
    for (int i = 0; i < ell; ++i) d.at(i, i) = 1;
    for (int i = 0; i < k; ++i) {
        d.at(i, ell) = -1;
        d.at(i, ell + 1) = x[i];
    }
    for (int i = k; i < ell; ++i) d.at(i, ell + 1) = -1;
    return d;
}

std::optional<NearExtremeReduction> reduceToNearExtremeForm(const Mat& d) {
    PosBasisReport rep = isPositiveBasis(d);
    if (!rep.verdict) return std::nullopt;
    int n = d.rows(), m = d.cols();
    int ell = rank(d);
    if (ell < 2 || (m != 2 * ell - 1 && m != ell + 2)) return std::nullopt;
    NearExtremeReduction out;

    EquivWitness w0 = EquivWitness::identity(n, m);
    Mat dred = d;
    if (ell < n) {
        RrefResult rr = rref(d);
        w0.basis = rr.basisChange;
        dred = rr.rref.subMatrix(0, ell, 0, m);
    }
    Decomposition dec = decomposeInIna(dred);
    const InForm& f = std::get<InForm>(dec);
    assert(f.ell == ell && f.X.cols() == 0);
    EquivWitness fLift = EquivWitness::identity(n, m);
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) fLift.basis.at(i, j) = f.witness.basis.at(i, j);
    fLift.perm = f.witness.perm;
    fLift.scale = f.witness.scale;
    EquivWitness base = composeEquiv(w0, fLift);
    int s = f.k;
    std::optional<NemShape> shape = validateNem(f.N);
    assert(shape);

    if (ell >= 2 && m == 2 * ell - 1) {
        Mat cur = applyEquiv(d, base);
        EquivWitness acc = base;
        auto step = [&](const EquivWitness& w) {
            cur = applyEquiv(cur, w);
            acc = composeEquiv(acc, w);
        };
        int b = 0;
        while (b < s && (b + 1 < s ? shape->z[b + 1] - shape->z[b] : ell + 1 - shape->z[s - 1]) != 2)
            ++b;
        assert(b < s);
        int off = shape->z[b] - 1;
        if (b > 0) {
            // Bring the two-row block and its column to the front.
            std::vector<int> rowOrder = {off, off + 1};
            for (int i = 0; i < ell; ++i)
                if (i != off && i != off + 1) rowOrder.push_back(i);
            EquivWitness mv = EquivWitness::identity(n, m);
            mv.basis = Mat(n, n);
            for (int i = 0; i < ell; ++i) mv.basis.at(rowOrder[i], i) = 1;
            for (int i = ell; i < n; ++i) mv.basis.at(i, i) = 1;
            for (int i = 0; i < ell; ++i) mv.perm[i] = rowOrder[i];
            std::vector<int> colOrder = {b};
            for (int c = 0; c < s; ++c)
                if (c != b) colOrder.push_back(c);
            for (int c = 0; c < s; ++c) mv.perm[ell + c] = ell + colOrder[c];
            step(mv);
        }
        bool k1 = true, k2 = true, k12 = true;
        for (int c = 1; c < s; ++c) {
            const Rat& a = cur.at(0, ell + c);
            const Rat& bb = cur.at(1, ell + c);
            k1 = k1 && a == 0 && bb <= 0;
            k2 = k2 && a <= 0 && bb == 0;
            k12 = k12 && a == bb && a >= 0;
        }
        assert(k1 || k2 || k12);
        if (!k1) {
            if (k2) {
                step(rowSwapStep(n, m, 0, 1, true));
            } else {
                step(negAddStep(n, m, 0));
                step(colSwapStep(n, m, 1, ell));
            }
        }
        Vec x;
        for (int c = 1; c < s; ++c) x.push_back(cur.at(1, ell + c));
        Mat target = genPb2lMinus1(ell, n, x);
        assert(cur == target);
        bool ok = verifyEquiv(d, target, acc);
        assert(ok);
        (void)ok;
        out.size2lMinus1 = NearExtremeReduction::Size2lMinus1{x, target, acc};
    }

    if (ell >= 2 && m == ell + 2) {
        Mat cur = applyEquiv(d, base);
        EquivWitness acc = base;
        auto step = [&](const EquivWitness& w) {
            cur = applyEquiv(cur, w);
            acc = composeEquiv(acc, w);
        };
        assert(s == 2);
        int k = shape->z[1] - 1;
        Vec v;
        for (int i = 0; i < k; ++i) v.push_back(cur.at(i, ell + 1));
        Rat mx = v[0];
        for (const Rat& t : v) mx = std::max(mx, t);
        if (mx > 0) {
            // Rebase on the unit vectors with the first maximizer replaced by
            // the first staircase column; the two echelon columns trade roles.
            int ri = 0;
            while (v[ri] != mx) ++ri;
            EquivWitness bc = EquivWitness::identity(n, m);
            bc.basis.at(ri, ri) = 0;
            for (int q = 0; q < k; ++q) bc.basis.at(q, ri) = -1;
            step(bc);
            step(colSwapStep(n, m, ri, ell));
        }
        int zi = 0;
        while (cur.at(zi, ell + 1) != 0) ++zi;
        assert(zi < k);
        if (zi != 0) step(rowSwapStep(n, m, 0, zi, true));
        Vec x;
        for (int i = 0; i < k; ++i) x.push_back(cur.at(i, ell + 1));
        Mat target = genPbLPlus2(ell, n, k, x);
        assert(cur == target);
        bool ok = verifyEquiv(d, target, acc);
        assert(ok);
        (void)ok;
        out.sizeLPlus2 = NearExtremeReduction::SizeLPlus2{k, x, target, acc};
    }
    return out;
}

}  // namespace posspan
