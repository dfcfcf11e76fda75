#include "h4/exact_matrix.hpp"

#include <utility>

namespace h4 {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("ExactMatrix: shape mismatch");
    ExactMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

ExactMatrix transpose(const ExactMatrix& a) {
    ExactMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

namespace {

// Reduces `a` to reduced row echelon form in place, applying the same row
// operations to `aug` (when it has rows). Returns the pivot count.
std::size_t eliminate(ExactMatrix& a, ExactMatrix& aug) {
    const bool with_aug = aug.rows() == a.rows();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t p = pivot_row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != pivot_row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(pivot_row, j));
            if (with_aug)
                for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(p, j), aug(pivot_row, j));
        }
        const GoldenScalar inv = a(pivot_row, col).inverse();
        for (std::size_t j = 0; j < a.cols(); ++j) a(pivot_row, j) *= inv;
        if (with_aug)
            for (std::size_t j = 0; j < aug.cols(); ++j) aug(pivot_row, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a(r, col).is_zero()) continue;
            const GoldenScalar f = a(r, col);
            for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) -= f * a(pivot_row, j);
            if (with_aug)
                for (std::size_t j = 0; j < aug.cols(); ++j) aug(r, j) -= f * aug(pivot_row, j);
        }
        ++pivot_row;
    }
    return pivot_row;
}

}  // namespace

ExactMatrix inverse(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    ExactMatrix work = a;
    ExactMatrix inv = ExactMatrix::identity(a.rows());
    if (eliminate(work, inv) != a.rows()) throw SingularMatrixError("inverse: singular matrix");
    return inv;
}

std::vector<GoldenScalar> solve(const ExactMatrix& a, const std::vector<GoldenScalar>& b) {
    if (a.rows() != a.cols() || b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
    ExactMatrix work = a;
    ExactMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    if (eliminate(work, rhs) != a.rows()) throw SingularMatrixError("solve: singular matrix");
    std::vector<GoldenScalar> x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
    return x;
}

std::size_t rank(ExactMatrix a) {
    ExactMatrix none;
    return eliminate(a, none);
}

}  // namespace h4
