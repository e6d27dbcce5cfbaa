#include <cmath>
#include <cstddef>

#include "kernels_impl.hpp"

namespace eisenfun::kernels::detail {

bool phf_point_scalar(int order, double x, double tol, int max_raw_terms, double* out,
                      double* last_term) {
  for (int c = 0; c < order; ++c) out[c] = 0.0;
  const int settle = 2 * order;
  double term = 1.0;
  int streak = 0;
  for (int n = 0; n < max_raw_terms; ++n) {
    const int c = n % order;
    if (n > 0) term = (term * x) / static_cast<double>(n);
    out[c] = out[c] + term;
    const bool small = std::fabs(term) < tol * (1.0 + std::fabs(out[c]));
    streak = small ? streak + 1 : 0;
    if (streak >= settle) return true;
  }
  *last_term = std::fabs(term);
  return false;
}

GridStatus phf_grid_scalar(int order, std::span<const double> xs, double tol,
                           int max_raw_terms, std::span<double> out) {
  GridStatus status;
  const auto m = static_cast<std::size_t>(order);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double last = 0.0;
    if (!phf_point_scalar(order, xs[i], tol, max_raw_terms, out.data() + i * m, &last) &&
        !status.failed_index) {
      status.failed_index = i;
      status.last_term = last;
    }
  }
  return status;
}

void complex_matmul_scalar(std::size_t n, const Complex* a, const Complex* b, Complex* c) {
  const auto* ad = reinterpret_cast<const double*>(a);
  const auto* bd = reinterpret_cast<const double*>(b);
  auto* cd = reinterpret_cast<double*>(c);
  for (std::size_t idx = 0; idx < 2 * n * n; ++idx) cd[idx] = 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cd + 2 * i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = ad[2 * (i * n + k)];
      const double ai = ad[2 * (i * n + k) + 1];
      if (ar == 0.0 && ai == 0.0) continue;
      const double* brow = bd + 2 * k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        const double re = ar * br - ai * bi;
        const double im = ar * bi + ai * br;
        crow[2 * j] = crow[2 * j] + re;
        crow[2 * j + 1] = crow[2 * j + 1] + im;
      }
    }
  }
}

}  // namespace eisenfun::kernels::detail
