#pragma once

#include <iosfwd>
#include <vector>

#include "posspan/rational.hpp"

namespace posspan {

using Vec = std::vector<Rat>;

// Dense row-major matrix of exact rationals.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    }

    static Mat identity(int n);
    static Mat fromRows(const std::vector<Vec>& rows);
    static Mat fromCols(const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    Vec col(int j) const;
    Vec row(int i) const;
    void setCol(int j, const Vec& v);

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Vec mulVec(const Vec& x) const;
    Vec mulLeft(const Vec& y) const;  // y^T * M
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool isZero() const;
    bool isZeroCol(int j) const;

    Mat subMatrix(int r0, int r1, int c0, int c1) const;  // half-open row/col ranges
    Mat selectCols(const std::vector<int>& idx) const;
    Mat dropCol(int j) const;
    Mat hcat(const Mat& o) const;
    Mat vcat(const Mat& o) const;

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// First line "rows cols", then row-major rational tokens separated by whitespace.
Mat parseMat(std::istream& in);
Mat parseMatFile(const std::string& path);
std::string formatMat(const Mat& m);

struct RrefResult {
    Mat rref;                 // reduced row-echelon form R
    std::vector<int> pivots;  // pivot column per nonzero row
    Mat basisChange;          // nonsingular B with R = B^{-1} M
};

RrefResult rref(const Mat& m);
int rank(const Mat& m);
Mat inverse(const Mat& m);  // throws std::domain_error on singular input

// Nonzero y with y^T M = 0, or empty when M has full row rank.
Vec leftNullVector(const Mat& m);

bool isZeroVec(const Vec& v);
Rat dot(const Vec& a, const Vec& b);

}  // namespace posspan
