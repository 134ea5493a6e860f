#include "posspan/equiv.hpp"

namespace posspan {

EquivWitness EquivWitness::identity(int n, int m) {
    EquivWitness w;
    w.basis = Mat::identity(n);
    w.perm.resize(m);
    for (int j = 0; j < m; ++j) w.perm[j] = j;
    w.scale.assign(m, Rat(1));
    return w;
}

void checkWitnessShape(const Mat& m, const EquivWitness& w) {
    if (w.basis.rows() != m.rows() || w.basis.cols() != m.rows())
        throw std::invalid_argument("witness basis shape mismatch");
    if (int(w.perm.size()) != m.cols() || int(w.scale.size()) != m.cols())
        throw std::invalid_argument("witness column count mismatch");
    std::vector<bool> seen(m.cols(), false);
    for (int j : w.perm) {
        if (j < 0 || j >= m.cols() || seen[j]) throw std::invalid_argument("witness perm not a permutation");
        seen[j] = true;
    }
    for (const auto& s : w.scale)
        if (s <= 0) throw std::invalid_argument("witness scale not positive");
    if (rank(w.basis) != w.basis.rows()) throw std::invalid_argument("witness basis singular");
}

Mat applyEquiv(const Mat& m, const EquivWitness& w) {
    checkWitnessShape(m, w);
    Mat binv = inverse(w.basis);
    Mat out(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        Vec c = binv.mulVec(m.col(w.perm[j]));
        for (auto& x : c) x *= w.scale[j];
        out.setCol(j, c);
    }
    return out;
}

bool verifyEquiv(const Mat& m, const Mat& canonical, const EquivWitness& w) {
    try {
        return applyEquiv(m, w) == canonical;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

EquivWitness composeEquiv(const EquivWitness& a, const EquivWitness& b) {
    if (a.perm.size() != b.perm.size() || a.basis.rows() != b.basis.rows())
        throw std::invalid_argument("witness composition shape mismatch");
    EquivWitness w;
    w.basis = a.basis * b.basis;
    int m = int(a.perm.size());
    w.perm.resize(m);
    w.scale.resize(m);
    for (int j = 0; j < m; ++j) {
        w.perm[j] = a.perm[b.perm[j]];
        w.scale[j] = a.scale[b.perm[j]] * b.scale[j];
    }
    return w;
}

}  // namespace posspan
