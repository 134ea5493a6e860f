#include "posspan/simplex.hpp"

#include <cassert>

namespace posspan {

Phase1Result phase1(const Mat& e, const Vec& b) {
    int r = e.rows(), c = e.cols();
    if (int(b.size()) != r) throw std::invalid_argument("phase1 rhs size mismatch");

    std::vector<int> sign(r, 1);
    // Tableau rows 0..r-1 over columns: structural 0..c-1, artificial c..c+r-1, rhs c+r.
    // Row r is the reduced-cost row for minimizing the artificial sum.
    int rhs = c + r;
    std::vector<Vec> t(r + 1, Vec(c + r + 1));
    for (int i = 0; i < r; ++i) {
        sign[i] = b[i] < 0 ? -1 : 1;
        for (int j = 0; j < c; ++j) t[i][j] = e.at(i, j) * sign[i];
        t[i][c + i] = 1;
        t[i][rhs] = b[i] * sign[i];
    }
    for (int j = 0; j <= rhs; ++j)
        for (int i = 0; i < r; ++i) t[r][j] -= t[i][j];
    for (int i = 0; i < r; ++i) t[r][c + i] = 0;

    std::vector<int> basis(r);
    for (int i = 0; i < r; ++i) basis[i] = c + i;

    for (;;) {
        int enter = -1;
        for (int j = 0; j < c + r; ++j)
            if (t[r][j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < r; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][rhs] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) break;  // unbounded descent cannot happen with artificials present
        Rat piv = t[leave][enter];
        for (int j = 0; j <= rhs; ++j) t[leave][j] /= piv;
        for (int i = 0; i <= r; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (int j = 0; j <= rhs; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Phase1Result res;
    Rat obj = -t[r][rhs];
    if (obj == 0) {
        res.feasible = true;
        res.point.assign(c, Rat(0));
        for (int i = 0; i < r; ++i)
            if (basis[i] < c) res.point[basis[i]] = t[i][rhs];
        assert(e.mulVec(res.point) == b);
    } else {
        res.feasible = false;
        res.dual.assign(r, Rat(0));
        for (int i = 0; i < r; ++i) res.dual[i] = (Rat(1) - t[r][c + i]) * sign[i];
        Vec prod = e.mulLeft(res.dual);
        for (const auto& v : prod) assert(v <= 0);
        assert(dot(res.dual, b) > 0);
    }
    return res;
}

}  // namespace posspan
