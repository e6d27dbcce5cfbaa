#pragma once

#include <cstddef>
#include <span>

#include "eisenfun/kernels.hpp"

namespace eisenfun::kernels::detail {

GridStatus phf_grid_scalar(int order, std::span<const double> xs, double tol,
                           int max_raw_terms, std::span<double> out);
void complex_matmul_scalar(std::size_t n, const Complex* a, const Complex* b, Complex* c);

// Processes one element; shared by the scalar kernel and the AVX2 tail.
bool phf_point_scalar(int order, double x, double tol, int max_raw_terms, double* out,
                      double* last_term);

#if defined(EISENFUN_HAVE_AVX2_KERNELS)
GridStatus phf_grid_avx2(int order, std::span<const double> xs, double tol,
                         int max_raw_terms, std::span<double> out);
void complex_matmul_avx2(std::size_t n, const Complex* a, const Complex* b, Complex* c);
#endif

}  // namespace eisenfun::kernels::detail
