#include "posspan/matrix.hpp"

#include <fstream>
#include <sstream>

namespace posspan {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::fromRows(const std::vector<Vec>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::fromCols(const std::vector<Vec>& cols) {
    int c = int(cols.size());
    int r = c ? int(cols[0].size()) : 0;
    Mat m(r, c);
    for (int j = 0; j < c; ++j) {
        if (int(cols[j].size()) != r) throw std::invalid_argument("ragged cols");
        for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Mat::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Mat::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Mat::setCol(int j, const Vec& v) {
    if (int(v.size()) != rows_) throw std::invalid_argument("setCol size");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("mul dimension mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Vec Mat::mulVec(const Vec& x) const {
    if (int(x.size()) != cols_) throw std::invalid_argument("mulVec dimension mismatch");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && x[j] != 0) r[i] += at(i, j) * x[j];
    return r;
}

Vec Mat::mulLeft(const Vec& y) const {
    if (int(y.size()) != rows_) throw std::invalid_argument("mulLeft dimension mismatch");
    Vec r(cols_);
    for (int i = 0; i < rows_; ++i)
        if (y[i] != 0)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0) r[j] += y[i] * at(i, j);
    return r;
}

bool Mat::isZero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool Mat::isZeroCol(int j) const {
    for (int i = 0; i < rows_; ++i)
        if (at(i, j) != 0) return false;
    return true;
}

Mat Mat::subMatrix(int r0, int r1, int c0, int c1) const {
    if (r0 < 0 || r1 > rows_ || c0 < 0 || c1 > cols_ || r0 > r1 || c0 > c1)
        throw std::invalid_argument("subMatrix range");
    Mat m(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) m.at(i - r0, j - c0) = at(i, j);
    return m;
}

Mat Mat::selectCols(const std::vector<int>& idx) const {
    Mat m(rows_, int(idx.size()));
    for (int j = 0; j < int(idx.size()); ++j) {
        if (idx[j] < 0 || idx[j] >= cols_) throw std::invalid_argument("selectCols index");
        for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
    }
    return m;
}

Mat Mat::dropCol(int j) const {
    std::vector<int> idx;
    for (int c = 0; c < cols_; ++c)
        if (c != j) idx.push_back(c);
    return selectCols(idx);
}

Mat Mat::hcat(const Mat& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat row mismatch");
    Mat m(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

Mat Mat::vcat(const Mat& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vcat col mismatch");
    Mat m(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
    return m;
}

Mat parseMat(std::istream& in) {
    int r, c;
    if (!(in >> r >> c)) throw std::invalid_argument("matrix header expected");
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    Mat m(r, c);
    std::string tok;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (!(in >> tok)) throw std::invalid_argument("matrix entries truncated");
            m.at(i, j) = parseRat(tok);
        }
    return m;
}

Mat parseMatFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return parseMat(in);
}

std::string formatMat(const Mat& m) {
    std::ostringstream out;
    out << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << formatRat(m.at(i, j));
        out << "\n";
    }
    return out.str();
}

RrefResult rref(const Mat& m) {
    int n = m.rows(), c = m.cols();
    Mat r = m;
    Mat e = Mat::identity(n);  // accumulates row operations: r = e * m
    std::vector<int> pivots;
    int prow = 0;
    for (int col = 0; col < c && prow < n; ++col) {
        int sel = -1;
        for (int i = prow; i < n; ++i)
            if (r.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != prow)
            for (int j = 0; j < c; ++j) std::swap(r.at(sel, j), r.at(prow, j));
        if (sel != prow)
            for (int j = 0; j < n; ++j) std::swap(e.at(sel, j), e.at(prow, j));
        Rat piv = r.at(prow, col);
        for (int j = 0; j < c; ++j) r.at(prow, j) /= piv;
        for (int j = 0; j < n; ++j) e.at(prow, j) /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == prow || r.at(i, col) == 0) continue;
            Rat f = r.at(i, col);
            for (int j = 0; j < c; ++j) r.at(i, j) -= f * r.at(prow, j);
            for (int j = 0; j < n; ++j) e.at(i, j) -= f * e.at(prow, j);
        }
        pivots.push_back(col);
        ++prow;
    }
    return {r, pivots, inverse(e)};
}

int rank(const Mat& m) { return int(rref(m).pivots.size()); }

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    Mat a = m;
    Mat inv = Mat::identity(n);
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) throw std::domain_error("singular matrix");
        if (sel != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(sel, j), a.at(col, j));
                std::swap(inv.at(sel, j), inv.at(col, j));
            }
        Rat piv = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= piv;
            inv.at(col, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Vec leftNullVector(const Mat& m) {
    auto r = rref(m);
    int rk = int(r.pivots.size());
    if (rk >= m.rows()) return {};
    // Row rk of basisChange^{-1} maps m to a zero row of the rref.
    Mat e = inverse(r.basisChange);
    return e.row(rk);
}

bool isZeroVec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace posspan
