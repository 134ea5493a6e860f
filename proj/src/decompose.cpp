#include "posspan/decompose.hpp"

#include <cassert>

namespace posspan {

namespace {

struct CoreResult {
    bool pssType;  // canonical [I_n N X] with k >= 1 (or k = 0 only when n = 0)
    EquivWitness w;
    int ell;
    int k;
    int acyclicCols;
    GordanVector acyclicWitness;
};

EquivWitness liftWitness(const EquivWitness& sub, int rowOffset, int colOffset, int totalRows,
                         int totalCols) {
    EquivWitness w = EquivWitness::identity(totalRows, totalCols);
    for (int i = 0; i < sub.basis.rows(); ++i)
        for (int j = 0; j < sub.basis.cols(); ++j)
            w.basis.at(rowOffset + i, rowOffset + j) = sub.basis.at(i, j);
    for (int j = 0; j < int(sub.perm.size()); ++j) {
        w.perm[colOffset + j] = colOffset + sub.perm[j];
        w.scale[colOffset + j] = sub.scale[j];
    }
    return w;
}

EquivWitness permWitness(int n, const std::vector<int>& order) {
    EquivWitness w = EquivWitness::identity(n, int(order.size()));
    w.perm = order;
    return w;
}

CoreResult core(const Mat& m) {
    int n = m.rows(), cols = m.cols();
    if (n == 0) return {true, EquivWitness::identity(0, cols), 0, 0, 0, GordanVector{{}}};

    for (int j = 0; j < cols; ++j) {
        if (!m.isZeroCol(j)) continue;
        CoreResult r = core(m.dropCol(j));
        // Reinsert the zero column at the very end of the tail.
        EquivWitness w;
        w.basis = r.w.basis;
        w.perm.resize(cols);
        w.scale.resize(cols);
        for (int jj = 0; jj + 1 < cols; ++jj) {
            int src = r.w.perm[jj];
            w.perm[jj] = src >= j ? src + 1 : src;
            w.scale[jj] = r.w.scale[jj];
        }
        w.perm[cols - 1] = j;
        w.scale[cols - 1] = 1;
        r.w = w;
        return r;
    }

    GordanResult g = gordanAlternative(m);
    if (g.gordan)
        return {false, EquivWitness::identity(n, cols), 0, 0, cols, *g.gordan};

    auto circuit = findCircuit(m);
    assert(circuit);
    int l1 = int(circuit->cols.size()) - 1;
    assert(l1 >= 1);
    EquivWitness w1 = circuitCanonicalWitness(m, *circuit);
    Mat m1 = applyEquiv(m, w1);

    if (l1 == n) return {true, w1, n, 1, 0, GordanVector{{}}};

    Mat mbar = m1.subMatrix(l1, n, l1 + 1, cols);
    CoreResult r = core(mbar);
    EquivWitness wl = liftWitness(r.w, l1, l1 + 1, n, cols);
    Mat m2 = applyEquiv(m1, wl);

    int sub = n - l1;  // rows of the residual
    if (r.pssType) {
        // Residual canonical [I_sub Nbar Xbar]; absorb its identity columns
        // into the basis, then order [I | circuit col, Nbar | Xbar].
        std::vector<Vec> bcols;
        for (int i = 0; i < l1; ++i) {
            Vec e(n, Rat(0));
            e[i] = 1;
            bcols.push_back(e);
        }
        for (int j = 0; j < sub; ++j) bcols.push_back(m2.col(l1 + 1 + j));
        EquivWitness w3 = EquivWitness::identity(n, cols);
        w3.basis = Mat::fromCols(bcols);
        std::vector<int> order;
        for (int j = 0; j < l1; ++j) order.push_back(j);
        for (int j = 0; j < sub; ++j) order.push_back(l1 + 1 + j);
        order.push_back(l1);
        for (int j = l1 + 1 + sub; j < cols; ++j) order.push_back(j);
        EquivWitness w = composeEquiv(composeEquiv(composeEquiv(w1, wl), w3), permWitness(n, order));
        return {true, w, n, r.k + 1, 0, GordanVector{{}}};
    }

    // Residual canonical [I_lb Nbar Xbar; 0 0 Abar|0].
    int lb = r.ell;
    std::vector<Vec> bcols;
    for (int i = 0; i < l1; ++i) {
        Vec e(n, Rat(0));
        e[i] = 1;
        bcols.push_back(e);
    }
    for (int j = 0; j < lb; ++j) bcols.push_back(m2.col(l1 + 1 + j));
    for (int i = l1 + lb; i < n; ++i) {
        Vec e(n, Rat(0));
        e[i] = 1;
        bcols.push_back(e);
    }
    EquivWitness w3 = EquivWitness::identity(n, cols);
    w3.basis = Mat::fromCols(bcols);
    std::vector<int> order;
    for (int j = 0; j < l1; ++j) order.push_back(j);
    for (int j = 0; j < lb; ++j) order.push_back(l1 + 1 + j);
    order.push_back(l1);
    for (int j = l1 + 1 + lb; j < cols; ++j) order.push_back(j);
    EquivWitness w = composeEquiv(composeEquiv(composeEquiv(w1, wl), w3), permWitness(n, order));
    return {false, w, l1 + lb, r.k + 1, r.acyclicCols, r.acyclicWitness};
}

}  // namespace

Decomposition decomposeInIna(const Mat& m) {
    if (m.isZero()) throw std::domain_error("all-zero matrix has no decomposition");
    int n = m.rows(), cols = m.cols();
    CoreResult r = core(m);
    Mat canon = applyEquiv(m, r.w);
    if (r.pssType) {
        InForm f;
        f.ell = n;
        f.k = r.k;
        f.N = canon.subMatrix(0, n, n, n + r.k);
        f.X = canon.subMatrix(0, n, n + r.k, cols);
        f.witness = r.w;
        assert(verifyDecomposition(m, Decomposition{f}));
        return f;
    }
    InaForm f;
    f.ell = r.ell;
    f.k = r.k;
    f.acyclicCols = r.acyclicCols;
    f.N = canon.subMatrix(0, r.ell, r.ell, r.ell + r.k);
    f.X = canon.subMatrix(0, r.ell, r.ell + r.k, cols);
    f.A = canon.subMatrix(r.ell, n, r.ell + r.k, r.ell + r.k + r.acyclicCols);
    f.acyclicWitness = r.acyclicWitness;
    f.witness = r.w;
    assert(verifyDecomposition(m, Decomposition{f}));
    return f;
}

Mat reassembleIn(int n, const InForm& f) {
    Mat id(n, f.ell);
    for (int i = 0; i < f.ell; ++i) id.at(i, i) = 1;
    return id.hcat(f.N).hcat(f.X);
}

Mat reassembleIna(int n, const InaForm& f) {
    int tail = f.X.cols();
    Mat top(f.ell, f.ell + f.k + tail);
    for (int i = 0; i < f.ell; ++i) top.at(i, i) = 1;
    for (int i = 0; i < f.ell; ++i) {
        for (int j = 0; j < f.k; ++j) top.at(i, f.ell + j) = f.N.at(i, j);
        for (int j = 0; j < tail; ++j) top.at(i, f.ell + f.k + j) = f.X.at(i, j);
    }
    Mat bottom(n - f.ell, f.ell + f.k + tail);
    for (int i = 0; i < n - f.ell; ++i)
        for (int j = 0; j < f.acyclicCols; ++j) bottom.at(i, f.ell + f.k + j) = f.A.at(i, j);
    return top.vcat(bottom);
}

bool verifyDecomposition(const Mat& m, const Decomposition& d) {
    int n = m.rows();
    if (const InForm* f = std::get_if<InForm>(&d)) {
        if (f->ell + f->k + f->X.cols() != m.cols()) return false;
        if (!verifyEquiv(m, reassembleIn(n, *f), f->witness)) return false;
        if (f->k > 0 && !validateNem(f->N)) return false;
        return true;
    }
    const InaForm& f = std::get<InaForm>(d);
    if (f.ell + f.k + f.X.cols() != m.cols()) return false;
    if (f.acyclicCols > f.X.cols()) return false;
    if (!verifyEquiv(m, reassembleIna(n, f), f.witness)) return false;
    if (f.k > 0 && !validateNem(f.N)) return false;
    if (!verifyGordanVector(f.A, f.acyclicWitness)) return false;
    return true;
}

}  // namespace posspan
