#include "posspan/certificates.hpp"

#include <boost/integer/common_factor.hpp>

namespace posspan {

bool verifyPositiveCombination(const Mat& d, const PositiveCombination& c) {
    if (int(c.x.size()) != d.cols()) return false;
    for (const auto& v : c.x)
        if (v <= 0) return false;
    return isZeroVec(d.mulVec(c.x));
}

bool verifySeparatingVector(const Mat& d, const SeparatingVector& s, bool requireNonzeroProduct) {
    if (int(s.y.size()) != d.rows()) return false;
    if (isZeroVec(s.y)) return false;
    Vec p = d.mulLeft(s.y);
    bool strict = false;
    for (const auto& v : p) {
        if (v < 0) return false;
        if (v > 0) strict = true;
    }
    return !requireNonzeroProduct || strict;
}

bool verifyGordanVector(const Mat& a, const GordanVector& g) {
    if (int(g.y.size()) != a.rows()) return false;
    Vec p = a.mulLeft(g.y);
    for (const auto& v : p)
        if (v < 1) return false;
    return true;
}

Vec normalizeMinToOne(const Vec& x) {
    if (x.empty()) return x;
    Rat mn = x[0];
    for (const auto& v : x) {
        if (v <= 0) throw std::invalid_argument("normalizeMinToOne: non-positive entry");
        if (v < mn) mn = v;
    }
    Vec out = x;
    for (auto& v : out) v /= mn;
    return out;
}

Vec normalizeIntegerDirection(const Vec& y) {
    if (y.empty() || isZeroVec(y)) return y;
    Int l = 1;
    for (const auto& v : y) l = boost::integer::lcm(l, Int(denominator(v)));
    std::vector<Int> z(y.size());
    Int g = 0;
    for (size_t i = 0; i < y.size(); ++i) {
        z[i] = Int(numerator(y[i])) * (l / Int(denominator(y[i])));
        g = boost::integer::gcd(g, z[i]);
    }
    // Only positive scaling: a separating vector does not survive a sign flip.
    Vec out(y.size());
    for (size_t i = 0; i < y.size(); ++i) out[i] = Rat(z[i] / g);
    return out;
}

}  // namespace posspan
