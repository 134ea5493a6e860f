#pragma once

#include "posspan/decompose.hpp"

namespace posspan {

enum class Cone { none, single, pair };

// 1-based cone indices to match the K_i / K_{i,j} naming.
struct CriticalVerdict {
    bool isCritical = false;
    Cone cone = Cone::none;
    int i = 0;
    int j = 0;
};

CriticalVerdict isCriticalVector(const Vec& v);

// True iff no replacement of a column of [I_n -1_n] by v positively spans R^n.
bool replacementOracle(const Vec& v);

struct CriticalStructure {
    std::vector<int> blockSizes;
    std::vector<int> rowOffsets;
    std::vector<Mat> blocks;  // X_1 .. X_{s-1}; block i has blockSizes[i] rows, s-1-i cols
};

// Requires an IN form [I_n N] with square identity part and no tail.
CriticalStructure criticalStructure(const InForm& f);

// Rebuilds N from the staircase plus the cross blocks.
Mat reassembleCriticalStructure(int n, const CriticalStructure& cs);

bool isCriticalMatrixLowDim(const Mat& x);

enum class PbMethod { criticalStructure, removalOracle, notPss };

struct PosBasisReport {
    bool verdict = false;
    PbMethod method = PbMethod::removalOracle;
    std::optional<SeparatingVector> notPssWitness;
    std::optional<CriticalStructure> structure;
    std::vector<bool> blockCritical;
    std::optional<int> removableCol;
    std::optional<PositiveCombination> removalCertificate;
};

PosBasisReport isPositiveBasis(const Mat& d);

// Complete oracle path, exposed for cross-checks.
PosBasisReport positiveBasisByRemoval(const Mat& d);

// Row/column permutations plus the negate-and-add transform putting every
// 2-row block's cross columns into K_1; throws std::domain_error when some
// block is not confined to a single cone.
std::pair<InForm, CriticalStructure> normalizeTwoRowBlocks(const InForm& f,
                                                           const CriticalStructure& cs);

Mat genMinimalPb(int ell, int n);
Mat genMaximalPb(int ell, int n);
Mat genPb2lMinus1(int ell, int n, const Vec& x);
Mat genPbLPlus2(int ell, int n, int k, const Vec& x);

struct NearExtremeReduction {
    struct Size2lMinus1 {
        Vec x;  // length l-2, non-positive
        Mat canonical;
        EquivWitness witness;
    };
    struct SizeLPlus2 {
        int k;
        Vec x;  // length k, non-positive, first entry zero
        Mat canonical;
        EquivWitness witness;
    };
    std::optional<Size2lMinus1> size2lMinus1;
    std::optional<SizeLPlus2> sizeLPlus2;
};

std::optional<NearExtremeReduction> reduceToNearExtremeForm(const Mat& d);

}  // namespace posspan
