#include <immintrin.h>

#include <cstddef>
#include <vector>

#include "kernels_impl.hpp"

namespace eisenfun::kernels::detail {

namespace {

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

// Wrapper so the vector element type carries its alignment.
struct Lanes {
  __m256d v;
};

}  // namespace

GridStatus phf_grid_avx2(int order, std::span<const double> xs, double tol,
                         int max_raw_terms, std::span<double> out) {
  GridStatus status;
  const auto m = static_cast<std::size_t>(order);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d tolv = _mm256_set1_pd(tol);
  const __m256d settle = _mm256_set1_pd(2.0 * order);
  std::vector<Lanes> acc(m);

  std::size_t i = 0;
  for (; i + 4 <= xs.size(); i += 4) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    for (auto& a : acc) a.v = _mm256_setzero_pd();
    __m256d term = one;
    __m256d streak = _mm256_setzero_pd();
    __m256d done = _mm256_setzero_pd();

    int n = 0;
    for (; n < max_raw_terms; ++n) {
      const auto c = static_cast<std::size_t>(n % order);
      if (n > 0) term = _mm256_div_pd(_mm256_mul_pd(term, x), _mm256_set1_pd(static_cast<double>(n)));
      // Finished lanes keep their sums and streaks untouched.
      acc[c].v = _mm256_blendv_pd(_mm256_add_pd(acc[c].v, term), acc[c].v, done);
      const __m256d bound = _mm256_mul_pd(tolv, _mm256_add_pd(one, abs_pd(acc[c].v)));
      const __m256d small = _mm256_cmp_pd(abs_pd(term), bound, _CMP_LT_OQ);
      const __m256d next = _mm256_and_pd(small, _mm256_add_pd(streak, one));
      streak = _mm256_blendv_pd(next, streak, done);
      done = _mm256_or_pd(done, _mm256_cmp_pd(streak, settle, _CMP_GE_OQ));
      if (_mm256_movemask_pd(done) == 0xF) break;
    }

    alignas(32) double lane[4];
    for (std::size_t c = 0; c < m; ++c) {
      _mm256_store_pd(lane, acc[c].v);
      for (std::size_t l = 0; l < 4; ++l) out[(i + l) * m + c] = lane[l];
    }
    const int mask = _mm256_movemask_pd(done);
    if (mask != 0xF && !status.failed_index) {
      _mm256_store_pd(lane, abs_pd(term));
      for (std::size_t l = 0; l < 4; ++l) {
        if (!(mask & (1 << l))) {
          status.failed_index = i + l;
          status.last_term = lane[l];
          break;
        }
      }
    }
  }

  for (; i < xs.size(); ++i) {
    double last = 0.0;
    if (!phf_point_scalar(order, xs[i], tol, max_raw_terms, out.data() + i * m, &last) &&
        !status.failed_index) {
      status.failed_index = i;
      status.last_term = last;
    }
  }
  return status;
}

void complex_matmul_avx2(std::size_t n, const Complex* a, const Complex* b, Complex* c) {
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
      const __m256d vr = _mm256_set1_pd(ar);
      const __m256d vi = _mm256_set1_pd(ai);
      std::size_t j = 0;
      // Two complex entries per register: (re0, im0, re1, im1).
      for (; j + 2 <= n; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d swapped = _mm256_permute_pd(bv, 0x5);
        const __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(vr, bv), _mm256_mul_pd(vi, swapped));
        _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(_mm256_loadu_pd(crow + 2 * j), prod));
      }
      for (; j < n; ++j) {
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
