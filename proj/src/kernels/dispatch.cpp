#include <cstdlib>
#include <string_view>

#include "eisenfun/error.hpp"
#include "kernels_impl.hpp"

namespace eisenfun::kernels {

namespace {

Isa detect() noexcept {
  Isa best = isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  if (const char* forced = std::getenv("EISENFUN_ISA")) {
    const std::string_view name(forced);
    if (name == "scalar") return Isa::scalar;
    if (name == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
  }
  return best;
}

void require_available(Isa isa) {
  if (!isa_available(isa)) {
    throw InvalidArgument("kernel ISA not available on this host: " + std::string(isa_name(isa)));
  }
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(EISENFUN_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept {
  static const Isa isa = detect();
  return isa;
}

GridStatus phf_grid(Isa isa, int order, std::span<const double> xs, double tol,
                    int max_raw_terms, std::span<double> out) {
  if (order < 2) throw InvalidOrder("phf_grid: order must be >= 2");
  if (out.size() < xs.size() * static_cast<std::size_t>(order)) {
    throw InvalidArgument("phf_grid: output span too small");
  }
  require_available(isa);
#if defined(EISENFUN_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2) return detail::phf_grid_avx2(order, xs, tol, max_raw_terms, out);
#endif
  return detail::phf_grid_scalar(order, xs, tol, max_raw_terms, out);
}

void complex_matmul(Isa isa, std::size_t n, std::span<const Complex> a,
                    std::span<const Complex> b, std::span<Complex> c) {
  if (a.size() < n * n || b.size() < n * n || c.size() < n * n) {
    throw InvalidArgument("complex_matmul: operand size does not match n*n");
  }
  require_available(isa);
#if defined(EISENFUN_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2) {
    detail::complex_matmul_avx2(n, a.data(), b.data(), c.data());
    return;
  }
#endif
  detail::complex_matmul_scalar(n, a.data(), b.data(), c.data());
}

}  // namespace eisenfun::kernels
