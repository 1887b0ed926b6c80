#pragma once

#include <cstddef>
#include <vector>

namespace besent {

// Row-major dense matrix of doubles; just enough linear algebra for the
// recurrent models.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }

    bool operator==(const Matrix&) const = default;
};

using Vec = std::vector<double>;

// out += M x
void matvec_add(const Matrix& m, const double* x, double* out);
// out += M^T x
void matvec_transpose_add(const Matrix& m, const double* x, double* out);
// M += a * x^T (outer product accumulate)
void outer_add(Matrix& m, const double* a, const double* x);

}  // namespace besent
