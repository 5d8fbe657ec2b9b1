#include "ggs/rat_matrix.hpp"

#include <stdexcept>

namespace ggs {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 1; i <= rows_; ++i)
        for (int k = 1; k <= cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 1; j <= o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMatrix: dimension mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix: inverse of non-square matrix");
    const int n = rows_;
    RatMatrix a = *this;
    RatMatrix inv = identity(n);
    for (int col = 1; col <= n; ++col) {
        int pivot = 0;
        for (int r = col; r <= n; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == 0) throw std::domain_error("RatMatrix: singular matrix");
        if (pivot != col)
            for (int c = 1; c <= n; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        Rat p = a.at(col, col);
        for (int c = 1; c <= n; ++c) {
            a.at(col, c) /= p;
            inv.at(col, c) /= p;
        }
        for (int r = 1; r <= n; ++r) {
            if (r == col) continue;
            Rat f = a.at(r, col);
            if (f == 0) continue;
            for (int c = 1; c <= n; ++c) {
                a.at(r, c) -= f * a.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

bool RatMatrix::is_skew() const {
    if (rows_ != cols_) return false;
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

} // namespace ggs
