#include "posspan/nem.hpp"

#include <cassert>

namespace posspan {

std::optional<NemShape> validateNem(const Mat& nem) {
    int n = nem.rows(), s = nem.cols();
    if (n < 1 || s < 1) return std::nullopt;
    std::vector<int> z{1};
    for (int j = 0; j + 1 < s; ++j) {
        int start = z.back();
        int run = 0;
        int i = start;
        while (i <= n && nem.at(i - 1, j) == -1) {
            ++run;
            ++i;
        }
        if (run == 0) return std::nullopt;
        int next = start + run;
        for (int r = next; r <= n; ++r)
            if (nem.at(r - 1, j) != 0) return std::nullopt;
        if (next > n) return std::nullopt;  // later columns need rows left
        z.push_back(next);
    }
    for (int r = z.back(); r <= n; ++r)
        if (nem.at(r - 1, s - 1) != -1) return std::nullopt;
    return NemShape{n, s, z};
}

PositiveCombination nemPositiveCombination(const Mat& nem) {
    auto shape = validateNem(nem);
    if (!shape) throw std::invalid_argument("not a negative echelon matrix");
    int n = nem.rows(), s = nem.cols();
    Vec w = nem.col(s - 1);
    Vec lambda(s, Rat(0));
    lambda[s - 1] = 1;
    for (int i = 1; i < s; ++i) {
        Rat norm = 0;
        for (const auto& v : w)
            if (ratAbs(v) > norm) norm = ratAbs(v);
        Rat coef = 2 * norm;
        Vec u = nem.col(s - 1 - i);
        for (int r = 0; r < n; ++r) w[r] += coef * u[r];
        lambda[s - 1 - i] = coef;
    }
    Vec x(n + s);
    for (int r = 0; r < n; ++r) {
        assert(w[r] < 0);
        x[r] = -w[r];
    }
    for (int j = 0; j < s; ++j) x[n + j] = lambda[j];
    PositiveCombination c{normalizeMinToOne(x)};
    assert(verifyPositiveCombination(Mat::identity(n).hcat(nem), c));
    return c;
}

}  // namespace posspan
