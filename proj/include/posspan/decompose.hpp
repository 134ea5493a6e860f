#pragma once

#include <variant>

#include "posspan/nem.hpp"
#include "posspan/pss.hpp"

namespace posspan {

// Canonical [I_{n,ell} | N | X]; produced with ell == n and k >= 1 exactly when
// the input positively spans the full space.
struct InForm {
    int ell;
    int k;
    Mat N;  // n x k negative echelon block
    Mat X;  // n x (m - ell - k) arbitrary tail
    EquivWitness witness;
};

// Canonical [I_ell N X; 0 0 A|0]. The bottom block of the first acyclicCols
// tail columns is acyclic; any remaining tail columns vanish below row ell
// (zero columns and columns inside the span of earlier circuits).
struct InaForm {
    int ell;
    int k;
    int acyclicCols;
    Mat N;  // ell x k
    Mat X;  // ell x (m - ell - k)
    Mat A;  // (n - ell) x acyclicCols
    GordanVector acyclicWitness;
    EquivWitness witness;
};

using Decomposition = std::variant<InForm, InaForm>;

// Repeated circuit extraction; throws std::domain_error on an all-zero matrix.
Decomposition decomposeInIna(const Mat& m);

Mat reassembleIn(int n, const InForm& f);
Mat reassembleIna(int n, const InaForm& f);

bool verifyDecomposition(const Mat& m, const Decomposition& d);

inline bool decompositionSaysPss(const Decomposition& d) {
    const InForm* in = std::get_if<InForm>(&d);
    return in && in->ell == in->N.rows() && in->k > 0;
}

}  // namespace posspan
