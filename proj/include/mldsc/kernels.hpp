#pragma once

namespace mldsc::kernels {

// Batch kernels over a structure-of-arrays tile: entry (r, l) of a tile
// buffer lives at r*stride + l, lane l = one Monte Carlo sample. Every
// kernel applies an identical per-lane operation sequence (explicit FMA in
// a fixed index order), so the scalar reference and the SIMD variants are
// bit-equivalent and results never depend on tiling or worker count.
struct Ops {
    const char* name;

    // y[r][l] = bias[r] + sum_c M[r][c] * x[c][l]   (M row-major rows x cols)
    void (*affine)(const double* M, const double* bias, const double* x, double* y,
                   int rows, int cols, int lanes, int stride);

    // y[r][l] += sum_c M[r][c] * x[c][l]
    void (*accumulate)(const double* M, const double* x, double* y, int rows, int cols,
                       int lanes, int stride);

    // acc[l] += w * sum_{r,c} S[r][c] * x[r][l] * x[c][l]   (S row-major n x n)
    void (*quad_accumulate)(const double* S, double w, const double* x, double* acc,
                            int n, int lanes, int stride);
};

enum class KernelChoice { Auto, Scalar, Simd };

const Ops& scalar_ops();
bool simd_available();
// Best SIMD implementation for this CPU; scalar when none applies.
const Ops& simd_ops();
// Auto resolves to simd_ops() when available. Throws std::runtime_error if
// Simd is forced on a CPU without support.
const Ops& select_ops(KernelChoice choice);

}  // namespace mldsc::kernels
