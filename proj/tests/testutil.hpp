#pragma once

#include <random>
#include <string>

#include "posspan/matrix.hpp"

#ifndef FIXTURES_DIR
#define FIXTURES_DIR "tests/fixtures"
#endif

inline std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

// Uniform entries from {lo, ..., hi}.
inline posspan::Mat randomIntMat(int rows, int cols, int lo, int hi, std::mt19937_64& rng) {
    posspan::Mat m(rows, cols);
    std::uniform_int_distribution<int> dist(lo, hi);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

inline posspan::Mat randomRatMat(int rows, int cols, std::mt19937_64& rng) {
    posspan::Mat m(rows, cols);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = posspan::Rat(num(rng), den(rng));
    return m;
}
