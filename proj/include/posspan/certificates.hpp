#pragma once

#include "posspan/matrix.hpp"

namespace posspan {

// Strictly positive x with D x = 0; witnesses that D positively spans its span.
struct PositiveCombination {
    Vec x;
};

// y != 0 with y^T D >= 0 componentwise. When strict somewhere the positive span
// of D is a proper subset of its linear span; rank-deficiency certificates may
// have y^T D = 0.
struct SeparatingVector {
    Vec y;
};

// y with y^T A >= 1 componentwise; witnesses that A is acyclic.
struct GordanVector {
    Vec y;
};

bool verifyPositiveCombination(const Mat& d, const PositiveCombination& c);
bool verifySeparatingVector(const Mat& d, const SeparatingVector& s, bool requireNonzeroProduct);
bool verifyGordanVector(const Mat& a, const GordanVector& g);

// Scales so the smallest component is 1; requires a strictly positive input.
Vec normalizeMinToOne(const Vec& x);

// Scales to coprime integers with the first nonzero entry positive.
Vec normalizeIntegerDirection(const Vec& y);

}  // namespace posspan
