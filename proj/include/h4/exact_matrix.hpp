#pragma once

#include "h4/golden_scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace h4 {

/// Dense row-major matrix over Q(tau, sqrt2). Small sizes only (rank <= 4 here).
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GoldenScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GoldenScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GoldenScalar> data_;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix transpose(const ExactMatrix& a);

/// Gauss-Jordan inverse; throws SingularMatrixError.
ExactMatrix inverse(const ExactMatrix& a);

/// Solve a x = b for square a; throws SingularMatrixError.
std::vector<GoldenScalar> solve(const ExactMatrix& a, const std::vector<GoldenScalar>& b);

/// Row rank by exact elimination.
std::size_t rank(ExactMatrix a);

}  // namespace h4
