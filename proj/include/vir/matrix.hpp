#ifndef VIR_MATRIX_HPP
#define VIR_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "vir/ratfunc.hpp"

namespace vir {

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    size_t rows_, cols_;
    std::vector<T> a_;
};

// Fraction-free (Bareiss) determinant over the polynomial ring; every
// intermediate division is exact.
MultiPoly determinant(const Matrix<MultiPoly>& m);

// Cofactor-expansion determinant, used as an independent cross-check.
MultiPoly determinant_cofactor(const Matrix<MultiPoly>& m);

// Solves A x = b over the rational-function field. Clears denominators
// row by row, then runs fraction-free elimination. Throws SingularMatrix.
std::vector<RatFunc> linear_solve(const Matrix<RatFunc>& a,
                                  const std::vector<RatFunc>& b);

}  // namespace vir

#endif
