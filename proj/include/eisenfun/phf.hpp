#pragma once

// Pseudo-hyperbolic functions: the order-m multisections
//
//   e_k(x) = sum_{n>=0} x^{mn+k} / (mn+k)!,   0 <= k < m,
//
// of the exponential series. Order 2 gives cosh/sinh; order 3 is the
// Eisenstein case where exp(omega x) = e_0(x) + omega e_1(x) + omega^2 e_2(x).
// Functions without an explicit order argument are the order-3 family.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "eisenfun/core_algebra.hpp"

namespace eisenfun {

inline constexpr double kDefaultSeriesTol = 1e-14;
inline constexpr int kDefaultMaxTerms = 400;

struct PhfComponents {
  int order = 3;
  Complex argument{};
  std::vector<Complex> values;  // e_0(argument) ... e_{order-1}(argument)
};

/// Power series f(x) = sum a_n x^n / n!, given by its coefficient rule a_n.
/// `eval`, when set, evaluates f directly and enables the rotation route of
/// parity_project_rotated.
struct SeriesSpec {
  std::function<Complex(int)> coeff;
  std::function<Complex(Complex)> eval;
  double tol = kDefaultSeriesTol;
  int max_terms = kDefaultMaxTerms;
};

// a_n = c^n, i.e. f(x) = exp(c x). exp_scaled_series({0, 1}) gives cos + i sin.
SeriesSpec exp_scaled_series(Complex c = {1.0, 0.0});
SeriesSpec cosh_series();
// f(x) = x^p.
SeriesSpec monomial_series(int p);
// f(x) = exp(-x^2).
SeriesSpec gaussian_series();

class TangentIndex {
 public:
  TangentIndex(int numerator, int denominator);

  int numerator() const noexcept { return m_; }
  int denominator() const noexcept { return n_; }

 private:
  int m_;
  int n_;
};

/// e_k(x) by direct summation. Stops once two consecutive terms fall below
/// tol * (1 + |partial sum|); throws TruncationError after `max_terms` terms.
Complex phf_series(int order, int k, Complex x, double tol = kDefaultSeriesTol,
                   int max_terms = kDefaultMaxTerms);

/// All components e_0..e_{order-1} at one argument.
PhfComponents phf_components(int order, Complex x, double tol = kDefaultSeriesTol);

/// e_k(x) = (1/m) sum_j w^{-kj} exp(w^j x), w = exp(2*pi*i/m).
Complex phf_projection(int order, int k, Complex x);

/// exp(omega^power x) = e^{-x/2}(cos(sqrt3 x/2), +-sin(sqrt3 x/2)); power in {1, 2}.
Complex exp_unit_closed(double x, int power);

/// d/dx e_k = e_{k-1}, with e_{-1} == e_{m-1}.
Complex phf_derivative(int order, int k, Complex x);

/// e_k(x + y) by the residue convolution sum_j e_{k-j}(x) e_j(y).
Complex phf_add(int order, int k, Complex x, Complex y);

/// The order-3 addition formula in its printed shape sum_j e_{k+j}(y) e_{k-j}(x).
/// Its index pairs sum to 2k mod 3, so it equals e_{2k mod 3}(x + y); correct
/// only for k = 0.
Complex phf_add_printed(int k, Complex x, Complex y);

/// |sum_j e_{k+j}(-x) e_{k-j}(x) - delta_{k,0}| for the order-3 family.
double fundamental_identity_residual(int k, double x);

/// e_k(-x) from the closed forms in e_0(x), e_1(x), e_2(x) divided by Delta(x).
double phf_reflect(int k, double x);

/// Delta(x) = e_0^3 + e_1^3 + e_2^3 - 3 e_0 e_1 e_2, identically 1.
double phf_delta(double x);

/// f_k(x) = sum_n a_{mn+k} x^{mn+k} / (mn+k)! by series.
Complex parity_project(const SeriesSpec& f, int order, int k, Complex x);

/// f_k(x) = (1/m) sum_j w^{-kj} f(w^j x). Requires f.eval.
Complex parity_project_rotated(const SeriesSpec& f, int order, int k, Complex x);

/// |e_k(w x) - w^k e_k(x)| with complex-argument series.
double parity_symmetry_residual(int order, int k, double x);

/// t_{m,n}(x) = e_m(x) / e_n(x). Throws PoleError when |e_n(x)| < 1e-300.
double tangent(const TangentIndex& t, double x);

/// d/dx t_{m,n} = t_{m-1,n} - t_{n-1,n} t_{m,n} (indices mod 3).
double tangent_derivative(const TangentIndex& t, double x);

/// |t_{0,2}(-x) - (t_{0,1}(x) - t_{2,0}(x)) / (t_{1,0}(x) - t_{2,1}(x))|.
double tangent_reflection_residual(double x);

/// s(x) = 1 / e_0(x).
double secant(double x);

/// s(x + t) - s(x) without the cancellation of subtracting two secants.
double secant_increment(double x, double t);

struct SecantDerivatives {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;
};

/// Five-point central stencils for s', s'', s''', s'''' at x, evaluated at
/// steps h and h/2 and combined by one Richardson extrapolation.
SecantDerivatives secant_stencil_derivatives(double x, double h);

/// |s''' + 3 t_{2,0} s'' + 3 t_{1,0} s' + s| from five-point stencils.
/// h must lie in [1e-4, 1e-2].
double secant_ode_residual(double x, double h);

/// Same with s'''' in place of s''' (the printed fourth-order form). Evaluates
/// to s(0) = 1 at x = 0, so it does not describe the secant.
double secant_ode_residual_printed(double x, double h);

/// Real-argument components on a grid, evaluated by the dispatched SIMD kernel.
class PhfTable {
 public:
  PhfTable(int order, std::vector<double> xs, std::vector<double> values)
      : order_(order), xs_(std::move(xs)), values_(std::move(values)) {}

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return xs_.size(); }
  double x(std::size_t i) const { return xs_[i]; }
  double at(std::size_t i, int k) const {
    return values_[i * static_cast<std::size_t>(order_) + static_cast<std::size_t>(k)];
  }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(values_).subspan(i * static_cast<std::size_t>(order_),
                                                    static_cast<std::size_t>(order_));
  }

 private:
  int order_;
  std::vector<double> xs_;
  std::vector<double> values_;
};

PhfTable phf_table(int order, std::span<const double> xs, double tol = kDefaultSeriesTol,
                   int max_terms = kDefaultMaxTerms);

}  // namespace eisenfun
