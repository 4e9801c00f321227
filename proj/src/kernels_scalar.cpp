// Scalar reference kernels. Every multiply-add is an explicit std::fma in a
// fixed index order; the SIMD variants replay exactly this sequence per
// lane, which is what makes the equivalence tests bit-exact.

#include <cmath>

#include "mldsc/kernels.hpp"

namespace mldsc::kernels {

namespace {

void affine_scalar(const double* M, const double* bias, const double* x, double* y,
                   int rows, int cols, int lanes, int stride) {
    for (int r = 0; r < rows; ++r) {
        const double* mrow = M + static_cast<long>(r) * cols;
        double* yrow = y + static_cast<long>(r) * stride;
        for (int l = 0; l < lanes; ++l) {
            double acc = bias[r];
            for (int c = 0; c < cols; ++c)
                acc = std::fma(mrow[c], x[static_cast<long>(c) * stride + l], acc);
            yrow[l] = acc;
        }
    }
}

void accumulate_scalar(const double* M, const double* x, double* y, int rows, int cols,
                       int lanes, int stride) {
    for (int r = 0; r < rows; ++r) {
        const double* mrow = M + static_cast<long>(r) * cols;
        double* yrow = y + static_cast<long>(r) * stride;
        for (int l = 0; l < lanes; ++l) {
            double acc = yrow[l];
            for (int c = 0; c < cols; ++c)
                acc = std::fma(mrow[c], x[static_cast<long>(c) * stride + l], acc);
            yrow[l] = acc;
        }
    }
}

void quad_accumulate_scalar(const double* S, double w, const double* x, double* acc,
                            int n, int lanes, int stride) {
    for (int l = 0; l < lanes; ++l) {
        double q = 0.0;
        for (int r = 0; r < n; ++r) {
            const double xr = x[static_cast<long>(r) * stride + l];
            const double* srow = S + static_cast<long>(r) * n;
            for (int c = 0; c < n; ++c) {
                const double prod = xr * x[static_cast<long>(c) * stride + l];
                q = std::fma(srow[c], prod, q);
            }
        }
        acc[l] = std::fma(w, q, acc[l]);
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", affine_scalar, accumulate_scalar,
                         quad_accumulate_scalar};
    return ops;
}

}  // namespace mldsc::kernels
