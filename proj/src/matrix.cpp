#include "besent/matrix.hpp"

namespace besent {

void matvec_add(const Matrix& m, const double* x, double* out) {
    for (std::size_t r = 0; r < m.rows; ++r) {
        const double* row = m.row(r);
        double acc = 0.0;
        for (std::size_t c = 0; c < m.cols; ++c) acc += row[c] * x[c];
        out[r] += acc;
    }
}

void matvec_transpose_add(const Matrix& m, const double* x, double* out) {
    for (std::size_t r = 0; r < m.rows; ++r) {
        const double* row = m.row(r);
        const double xr = x[r];
        for (std::size_t c = 0; c < m.cols; ++c) out[c] += row[c] * xr;
    }
}

void outer_add(Matrix& m, const double* a, const double* x) {
    for (std::size_t r = 0; r < m.rows; ++r) {
        double* row = m.row(r);
        const double ar = a[r];
        for (std::size_t c = 0; c < m.cols; ++c) row[c] += ar * x[c];
    }
}

}  // namespace besent
