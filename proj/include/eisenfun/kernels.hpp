#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
//
// Every variant performs the same IEEE operations in the same order (kernel
// sources are built with -ffp-contract=off), so results are bitwise
// identical across ISAs. The active ISA is picked once from CPUID and may be
// forced with EISENFUN_ISA=scalar|avx2.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "eisenfun/core_algebra.hpp"

namespace eisenfun::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;
Isa active_isa() noexcept;

/// Result of a grid series evaluation. `failed_index` names the first input
/// whose series did not settle within the raw-term cap.
struct GridStatus {
  std::optional<std::size_t> failed_index;
  double last_term = 0.0;
};

/// All order-m multisection components of exp at each real x.
///
/// Raw terms x^n/n! are generated by term = (term * x) / n and accumulated into
/// out[i*order + n % order]. A point is finished after 2*order consecutive raw
/// terms with |term| < tol * (1 + |component sum|).
GridStatus phf_grid(Isa isa, int order, std::span<const double> xs, double tol,
                    int max_raw_terms, std::span<double> out);

/// c = a * b for dense row-major n x n complex matrices. Zero entries of `a`
/// are skipped.
void complex_matmul(Isa isa, std::size_t n, std::span<const Complex> a,
                    std::span<const Complex> b, std::span<Complex> c);

}  // namespace eisenfun::kernels
