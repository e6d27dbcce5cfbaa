#include "eisenfun/eft.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eisenfun/error.hpp"
#include "eisenfun/phf.hpp"

namespace eisenfun {

namespace {

constexpr int kInitialIntervals = 16;
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

}  // namespace

void QuadratureSpec::validate() const {
  if (!(half_width >= 1.0)) throw InvalidArgument("quadrature half width must be >= 1");
  if (!(abs_tol >= 1e-13)) throw InvalidArgument("quadrature abs_tol must be >= 1e-13");
  if (max_refinements < 1 || max_refinements > 24) {
    throw InvalidArgument("quadrature refinements must lie in [1, 24]");
  }
}

double gaussian(double x) { return std::exp(-x * x); }

double exp_decay(double x) { return std::exp(-std::fabs(x)); }

Complex simpson_refine(const std::function<Complex(double)>& g, double a, double b,
                       double abs_tol, int max_refinements) {
  int n = kInitialIntervals;
  double h = (b - a) / n;
  const Complex ends = g(a) + g(b);
  Complex odd{0.0, 0.0};
  Complex even{0.0, 0.0};
  for (int i = 1; i < n; ++i) (i % 2 == 1 ? odd : even) += g(a + i * h);
  Complex estimate = (ends + 4.0 * odd + 2.0 * even) * (h / 3.0);

  double delta = 0.0;
  for (int r = 0; r < max_refinements; ++r) {
    // Old nodes all become even nodes; the new midpoints are the odd ones.
    even += odd;
    odd = Complex{0.0, 0.0};
    n *= 2;
    h *= 0.5;
    for (int i = 1; i < n; i += 2) odd += g(a + i * h);
    const Complex refined = (ends + 4.0 * odd + 2.0 * even) * (h / 3.0);
    delta = std::abs(refined - estimate);
    estimate = refined;
    if (delta < abs_tol) return estimate;
  }
  throw ConvergenceError("Simpson refinement did not reach abs_tol, last change " +
                             std::to_string(delta),
                         delta);
}

bool existence_probe(const RealFunction& f, double k, double half_width) {
  const auto weighted = [&](double x) { return std::fabs(f(x) * std::exp(0.5 * k * x)); };
  const double edge = half_width;
  const double mid = 0.5 * half_width;
  return weighted(edge) < 1e-12 && weighted(-edge) < 1e-12 && weighted(mid) < 1e-6 &&
         weighted(-mid) < 1e-6;
}

bool component_existence_probe(const RealFunction& f, int m, double k, double half_width) {
  if (m < 0 || m > 2) throw InvalidOrder("EFT component index must be 0, 1 or 2");
  const auto weighted = [&](double x) {
    return std::fabs(f(x) * phf_projection(3, m, Complex{-k * x, 0.0}).real());
  };
  const double edge = half_width;
  const double mid = 0.5 * half_width;
  return weighted(edge) < 1e-12 && weighted(-edge) < 1e-12 && weighted(mid) < 1e-6 &&
         weighted(-mid) < 1e-6;
}

namespace {

void require_transform(const RealFunction& f, double k, const QuadratureSpec& quad) {
  quad.validate();
  if (!existence_probe(f, k, quad.half_width)) {
    throw ExistenceError("EFT integrand f(x) exp(kx/2) has not decayed at +-" +
                         std::to_string(quad.half_width) + " for k = " + std::to_string(k));
  }
}

}  // namespace

Complex eft(const RealFunction& f, double k, int variant, const QuadratureSpec& quad) {
  if (variant != 1 && variant != 2) throw InvalidArgument("EFT variant must be 1 or 2");
  require_transform(f, k, quad);
  const double sign = variant == 1 ? -1.0 : 1.0;
  const auto integrand = [&](double x) {
    const double phase = sign * kHalfSqrt3 * k * x;
    return f(x) * std::exp(0.5 * k * x) * Complex{std::cos(phase), std::sin(phase)};
  };
  const double L = quad.half_width;
  return kInvSqrt2Pi * simpson_refine(integrand, -L, L, quad.abs_tol, quad.max_refinements);
}

double eft_component(const RealFunction& f, int m, double k, const QuadratureSpec& quad) {
  quad.validate();
  if (!component_existence_probe(f, m, k, quad.half_width)) {
    throw ExistenceError("EFT component integrand f(x) e_m(-kx) has not decayed at +-" +
                         std::to_string(quad.half_width) + " for k = " + std::to_string(k));
  }
  const auto integrand = [&](double x) {
    return Complex{f(x) * phf_projection(3, m, Complex{-k * x, 0.0}).real(), 0.0};
  };
  const double L = quad.half_width;
  return kInvSqrt2Pi *
         simpson_refine(integrand, -L, L, quad.abs_tol, quad.max_refinements).real();
}

CosSinParts eft_cos_sin(const RealFunction& f, double k, const QuadratureSpec& quad) {
  const Complex first = eft(f, k, 1, quad);
  const Complex second = eft(f, k, 2, quad);
  return {(second + first) / 2.0, (second - first) / Complex{0.0, 2.0}};
}

double gaussian_eft_closed(int m, double k) {
  if (m < 0 || m > 2) throw InvalidOrder("EFT component index must be 0, 1 or 2");
  static constexpr int kSwap[3] = {0, 2, 1};
  return phf_series(3, kSwap[m], Complex{0.25 * k * k, 0.0}).real() / std::numbers::sqrt2;
}

}  // namespace eisenfun
