// Dense matrices of exact rationals, just large enough for the (n-1) and n
// sized basis changes. Inversion is exact Gauss-Jordan; no floating point.

#ifndef GGS_RAT_MATRIX_HPP
#define GGS_RAT_MATRIX_HPP

#include "ggs/rational.hpp"

#include <vector>

namespace ggs {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // 1-indexed access
    Rat& at(int r, int c) { return e_[(r - 1) * cols_ + (c - 1)]; }
    const Rat& at(int r, int c) const { return e_[(r - 1) * cols_ + (c - 1)]; }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix transpose() const;

    // throws std::domain_error if singular
    RatMatrix inverse() const;

    bool is_skew() const;

    bool operator==(const RatMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

} // namespace ggs

#endif
