#pragma once

#include <optional>

#include "posspan/certificates.hpp"

namespace posspan {

// Staircase shape of a negative echelon matrix: 1-based breakpoints
// z[0] = 1 < z[1] < ... < z[s-1] <= n. Column j (1-based, j < s) carries -1 on
// rows [z[j-1], z[j]-1] and zeros from row z[j] down; column s carries -1 from
// row z[s-1] down. Entries above each -1 run are arbitrary.
struct NemShape {
    int n;
    int s;
    std::vector<int> z;
};

std::optional<NemShape> validateNem(const Mat& nem);

// Strictly positive x with [I_n N] x = 0, built by the doubling recursion on
// the columns of N taken from last to first.
PositiveCombination nemPositiveCombination(const Mat& nem);

}  // namespace posspan
