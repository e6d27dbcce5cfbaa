#pragma once

// Eisenstein-Fourier transform
//
//   F(k; w^p) = (1/sqrt(2 pi)) int f(x) exp(-k w^p x) dx,  p in {1, 2},
//
// with kernel exp(-k w x) = exp(k x / 2) exp(-i sqrt3 k x / 2). The integral is
// taken over [-L, L] by composite Simpson refinement (interval halving until
// two successive estimates differ by less than abs_tol).

#include <functional>

#include "eisenfun/core_algebra.hpp"

namespace eisenfun {

using RealFunction = std::function<double(double)>;

struct QuadratureSpec {
  double half_width = 10.0;
  double abs_tol = 1e-12;
  int max_refinements = 20;

  // Throws InvalidArgument unless L >= 1, abs_tol >= 1e-13, 1 <= refinements <= 24.
  void validate() const;
};

struct CosSinParts {
  Complex cos_part;  // (F(k; w^2) + F(k; w)) / 2
  Complex sin_part;  // (F(k; w^2) - F(k; w)) / (2i)
};

double gaussian(double x);   // exp(-x^2)
double exp_decay(double x);  // exp(-|x|)

/// True iff |f(x) e^{kx/2}| < 1e-12 at x = +-L and < 1e-6 at x = +-L/2.
bool existence_probe(const RealFunction& f, double k, double half_width);

/// Same heuristic for the component integrand |f(x) e_m(-k x)|.
bool component_existence_probe(const RealFunction& f, int m, double k, double half_width);

/// Throws ExistenceError if the probe fails and ConvergenceError if the
/// refinement cap is reached.
Complex eft(const RealFunction& f, double k, int variant, const QuadratureSpec& quad = {});

/// (1/sqrt(2 pi)) int f(x) e_m(-k x) dx with e_m the order-3 PHF.
double eft_component(const RealFunction& f, int m, double k, const QuadratureSpec& quad = {});

CosSinParts eft_cos_sin(const RealFunction& f, double k, const QuadratureSpec& quad = {});

/// Gaussian transform components in closed form: e_{sigma(m)}(k^2/4) / sqrt2
/// with sigma swapping components 1 and 2.
double gaussian_eft_closed(int m, double k);

/// Composite Simpson on [a, b], refined until successive estimates agree to
/// abs_tol. Exposed for the quadrature oracle tests.
Complex simpson_refine(const std::function<Complex(double)>& g, double a, double b,
                       double abs_tol, int max_refinements);

}  // namespace eisenfun
