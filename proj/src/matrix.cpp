#include "vir/matrix.hpp"

namespace vir {

namespace {

// One forward pass of the Bareiss fraction-free elimination on an n x m
// matrix (m >= n). Returns the permutation sign, or 0 if a pivot column
// is entirely zero (singular / zero determinant).
int bareiss_forward(Matrix<MultiPoly>& m) {
    size_t n = m.rows();
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(1);
    for (size_t k = 0; k < n; ++k) {
        if (m(k, k).is_zero()) {
            size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < m.cols(); ++j) {
                MultiPoly t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                auto q = divide_exact(t, prev);
                m(i, j) = std::move(*q);  // division is exact by Bareiss
            }
            m(i, k) = MultiPoly();
        }
        prev = m(k, k);
    }
    return sign;
}

}  // namespace

MultiPoly determinant(const Matrix<MultiPoly>& m_in) {
    if (m_in.rows() != m_in.cols())
        throw std::invalid_argument("determinant: matrix not square");
    if (m_in.rows() == 0) return MultiPoly::constant(1);
    Matrix<MultiPoly> m = m_in;
    int sign = bareiss_forward(m);
    if (sign == 0) return MultiPoly();
    MultiPoly d = m(m.rows() - 1, m.rows() - 1);
    return sign == 1 ? d : -d;
}

MultiPoly determinant_cofactor(const Matrix<MultiPoly>& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    size_t n = m.rows();
    if (n == 0) return MultiPoly::constant(1);
    if (n == 1) return m(0, 0);
    MultiPoly d;
    for (size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        Matrix<MultiPoly> minor(n - 1, n - 1);
        for (size_t i = 1; i < n; ++i)
            for (size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = m(i, k);
        MultiPoly term = m(0, j) * determinant_cofactor(minor);
        d = (j % 2 == 0) ? d + term : d - term;
    }
    return d;
}

std::vector<RatFunc> linear_solve(const Matrix<RatFunc>& a,
                                  const std::vector<RatFunc>& b) {
    size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("linear_solve: shape mismatch");
    if (n == 0) return {};
    // Clear denominators per row so elimination stays in the polynomial ring.
    Matrix<MultiPoly> m(n, n + 1);
    for (size_t i = 0; i < n; ++i) {
        MultiPoly scale = MultiPoly::constant(1);
        for (size_t j = 0; j < n; ++j)
            scale = *divide_exact(scale * a(i, j).den(),
                                  poly_gcd(scale, a(i, j).den()));
        scale = *divide_exact(scale * b[i].den(), poly_gcd(scale, b[i].den()));
        for (size_t j = 0; j < n; ++j)
            m(i, j) = a(i, j).num() * *divide_exact(scale, a(i, j).den());
        m(i, n) = b[i].num() * *divide_exact(scale, b[i].den());
    }
    if (bareiss_forward(m) == 0) throw SingularMatrix("linear_solve: singular matrix");
    std::vector<RatFunc> x(n);
    for (size_t i = n; i-- > 0;) {
        RatFunc s(m(i, n));
        for (size_t j = i + 1; j < n; ++j) s -= RatFunc(m(i, j)) * x[j];
        x[i] = s / RatFunc(m(i, i));
    }
    return x;
}

}  // namespace vir
