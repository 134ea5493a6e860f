#pragma once

#include "posspan/matrix.hpp"

namespace posspan {

// Structural equivalence M' = B^{-1} M P Delta.
// Column j of the result is basis^{-1} * M.col(perm[j]) * scale[j].
struct EquivWitness {
    Mat basis;              // nonsingular n x n
    std::vector<int> perm;  // permutation of 0..m-1
    Vec scale;              // positive rationals, one per column

    static EquivWitness identity(int n, int m);
};

Mat applyEquiv(const Mat& m, const EquivWitness& w);
bool verifyEquiv(const Mat& m, const Mat& canonical, const EquivWitness& w);

// first, then second: applyEquiv(M, compose(a, b)) == applyEquiv(applyEquiv(M, a), b).
EquivWitness composeEquiv(const EquivWitness& a, const EquivWitness& b);

void checkWitnessShape(const Mat& m, const EquivWitness& w);

}  // namespace posspan
