#pragma once

#include <optional>
#include <variant>

#include "posspan/certificates.hpp"
#include "posspan/equiv.hpp"

namespace posspan {

// Exactly one branch is set: either a strictly positive null combination of the
// columns, or a separating vector y with y^T D >= 0 and y^T D != 0.
struct StiemkeResult {
    std::optional<PositiveCombination> positive;
    std::optional<SeparatingVector> separating;
};

StiemkeResult stiemkeAlternative(const Mat& d);

struct PssResult {
    bool pss;
    std::optional<PositiveCombination> combination;
    std::optional<SeparatingVector> separating;
};

// Does D positively span its own linear span?
PssResult isPss(const Mat& d);

// Does D positively span the full ambient space? Adds the rank condition; a
// rank-deficient PSS of its span yields a separating vector with y^T D = 0.
PssResult isPssFullSpace(const Mat& d);

// Either y with y^T A >= 1, or nonzero x >= 0 with A x = 0.
struct GordanResult {
    std::optional<GordanVector> gordan;
    std::optional<Vec> nullCombination;
};

GordanResult gordanAlternative(const Mat& a);

bool isAcyclic(const Mat& a);

// Basis change making every entry strictly positive; requires A acyclic.
EquivWitness acyclicPositiveForm(const Mat& a, const GordanVector& g);

// Inclusion-minimal non-acyclic column set together with the strictly positive
// null combination of the selected columns. Empty optional when A is acyclic.
struct Circuit {
    std::vector<int> cols;  // ascending; a single zero column when its span is trivial
    Vec combination;        // strictly positive, one entry per selected column
};

std::optional<Circuit> findCircuit(const Mat& a);

bool isCircuit(const Mat& d);

// Canonical form [I_l -1_l X; 0 0 Y] for a circuit on l+1 columns, or a zero
// column index.
struct ZeroColumn {
    int col;
};
struct CircuitForm {
    int ell;
    EquivWitness witness;
};
using NonAcyclicWitness = std::variant<ZeroColumn, CircuitForm>;

// Requires A non-acyclic.
NonAcyclicWitness nonAcyclicWitness(const Mat& a);

// Witness to [I_l | v_1 .. v_{m-l}; 0] with sum(v_i) = -1_l, for a PSS of its
// span of rank l. Throws std::domain_error when D is not a PSS of its span.
struct CanonicalPssForm {
    int ell;
    std::vector<Vec> v;  // m - l vectors in R^l
    EquivWitness witness;
};

CanonicalPssForm canonicalPssForm(const Mat& d);

// Shared helper: witness mapping A to [I_l -1_l X; 0 0 Y] for a circuit c of A.
EquivWitness circuitCanonicalWitness(const Mat& a, const Circuit& c);

}  // namespace posspan
