#include "eisenfun/phf.hpp"

#include <array>
#include <cmath>
#include <string>

#include "eisenfun/error.hpp"
#include "eisenfun/kernels.hpp"

namespace eisenfun {

namespace {

constexpr double kPoleThreshold = 1e-300;

void require_component(int order, int k) {
  if (order < 2) throw InvalidOrder("PHF order must be >= 2, got " + std::to_string(order));
  if (k < 0 || k >= order) {
    throw InvalidOrder("component index " + std::to_string(k) + " outside [0, " +
                       std::to_string(order) + ")");
  }
}

void require_series_params(double tol, int max_terms) {
  if (!(tol > 0.0)) throw InvalidArgument("series tolerance must be positive");
  if (max_terms < 1) throw InvalidArgument("series term cap must be positive");
}

// sum_{n >= first} x^{order*n + k} / (order*n + k)!
Complex series_from(int order, int k, Complex x, double tol, int max_terms, int first) {
  const int start = order * first + k;
  Complex term{1.0, 0.0};
  for (int j = 1; j <= start; ++j) term *= x / static_cast<double>(j);

  Complex partial{0.0, 0.0};
  int streak = 0;
  int p = start;
  for (int n = 0; n < max_terms; ++n) {
    partial += term;
    if (!std::isfinite(partial.real()) || !std::isfinite(partial.imag())) {
      throw NonFiniteError("PHF series overflowed");
    }
    streak = std::abs(term) < tol * (1.0 + std::abs(partial)) ? streak + 1 : 0;
    if (streak >= 2) return partial;
    for (int j = 0; j < order; ++j) {
      ++p;
      term *= x / static_cast<double>(p);
    }
  }
  throw TruncationError("PHF series did not converge within " + std::to_string(max_terms) +
                            " terms",
                        std::abs(term));
}

std::array<double, 3> components3(double x) {
  std::array<double, 3> e{};
  for (int k = 0; k < 3; ++k) e[static_cast<std::size_t>(k)] = phf_series(3, k, x).real();
  return e;
}

double component3(int k, double x) { return phf_series(3, mod_index(k, 3), x).real(); }

double checked_ratio(double num, double den, const char* what) {
  if (std::fabs(den) < kPoleThreshold) throw PoleError(std::string(what) + ": pole");
  return num / den;
}

// t_{m,n} with indices mod 3; m == n is allowed here (t_{n,n} = 1).
double ratio3(const std::array<double, 3>& e, int m, int n) {
  return checked_ratio(e[static_cast<std::size_t>(mod_index(m, 3))],
                       e[static_cast<std::size_t>(mod_index(n, 3))], "Eisenstein tangent");
}

Complex int_power(Complex c, int n) {
  Complex result{1.0, 0.0};
  Complex base = c;
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1u) result *= base;
    base *= base;
  }
  return result;
}

double factorial(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

}  // namespace

SeriesSpec exp_scaled_series(Complex c) {
  SeriesSpec s;
  s.coeff = [c](int n) { return int_power(c, n); };
  s.eval = [c](Complex z) { return std::exp(c * z); };
  return s;
}

SeriesSpec cosh_series() {
  SeriesSpec s;
  s.coeff = [](int n) { return Complex{n % 2 == 0 ? 1.0 : 0.0, 0.0}; };
  s.eval = [](Complex z) { return std::cosh(z); };
  return s;
}

SeriesSpec monomial_series(int p) {
  if (p < 0 || p > 170) throw RangeError("monomial degree must lie in [0, 170]");
  SeriesSpec s;
  const double pf = factorial(p);
  s.coeff = [p, pf](int n) { return Complex{n == p ? pf : 0.0, 0.0}; };
  s.eval = [p](Complex z) { return int_power(z, p); };
  return s;
}

SeriesSpec gaussian_series() {
  SeriesSpec s;
  // exp(-x^2) = sum_j (-1)^j x^{2j} / j!, so a_{2j} = (-1)^j (2j)! / j!.
  s.coeff = [](int n) {
    if (n % 2 != 0) return Complex{0.0, 0.0};
    const int j = n / 2;
    double a = 1.0;
    for (int r = j + 1; r <= n; ++r) a *= r;
    return Complex{j % 2 == 0 ? a : -a, 0.0};
  };
  s.eval = [](Complex z) { return std::exp(-z * z); };
  return s;
}

TangentIndex::TangentIndex(int numerator, int denominator) : m_(numerator), n_(denominator) {
  if (m_ < 0 || m_ > 2 || n_ < 0 || n_ > 2 || m_ == n_) {
    throw InvalidArgument("tangent indices must be distinct and in {0, 1, 2}");
  }
}

Complex phf_series(int order, int k, Complex x, double tol, int max_terms) {
  require_component(order, k);
  require_series_params(tol, max_terms);
  return series_from(order, k, x, tol, max_terms, 0);
}

PhfComponents phf_components(int order, Complex x, double tol) {
  require_component(order, 0);
  PhfComponents out;
  out.order = order;
  out.argument = x;
  out.values.reserve(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) out.values.push_back(phf_series(order, k, x, tol));
  return out;
}

Complex phf_projection(int order, int k, Complex x) {
  require_component(order, k);
  Complex sum{0.0, 0.0};
  for (int j = 0; j < order; ++j) {
    sum += cyclic_unit(order, -k * j) * std::exp(cyclic_unit(order, j) * x);
  }
  return sum / static_cast<double>(order);
}

Complex exp_unit_closed(double x, int power) {
  if (power != 1 && power != 2) throw InvalidArgument("exp_unit_closed: power must be 1 or 2");
  const double modulus = std::exp(-0.5 * x);
  const double phase = kHalfSqrt3 * x;
  const double sign = power == 1 ? 1.0 : -1.0;
  return {modulus * std::cos(phase), sign * modulus * std::sin(phase)};
}

Complex phf_derivative(int order, int k, Complex x) {
  require_component(order, k);
  return phf_series(order, mod_index(k - 1, order), x);
}

Complex phf_add(int order, int k, Complex x, Complex y) {
  require_component(order, k);
  Complex sum{0.0, 0.0};
  for (int j = 0; j < order; ++j) {
    sum += phf_series(order, mod_index(k - j, order), x) * phf_series(order, j, y);
  }
  return sum;
}

Complex phf_add_printed(int k, Complex x, Complex y) {
  require_component(3, k);
  Complex sum{0.0, 0.0};
  for (int j = 0; j < 3; ++j) {
    sum += phf_series(3, mod_index(k + j, 3), y) * phf_series(3, mod_index(k - j, 3), x);
  }
  return sum;
}

double fundamental_identity_residual(int k, double x) {
  require_component(3, k);
  double sum = 0.0;
  for (int j = 0; j < 3; ++j) sum += component3(k + j, -x) * component3(k - j, x);
  return std::fabs(sum - (k == 0 ? 1.0 : 0.0));
}

double phf_delta(double x) {
  const auto [e0, e1, e2] = components3(x);
  return e0 * e0 * e0 + e1 * e1 * e1 + e2 * e2 * e2 - 3.0 * e0 * e1 * e2;
}

double phf_reflect(int k, double x) {
  require_component(3, k);
  const auto [e0, e1, e2] = components3(x);
  const double delta = e0 * e0 * e0 + e1 * e1 * e1 + e2 * e2 * e2 - 3.0 * e0 * e1 * e2;
  switch (k) {
    case 0:
      return (e0 * e0 - e1 * e2) / delta;
    case 1:
      return (e2 * e2 - e0 * e1) / delta;
    default:
      return (e1 * e1 - e0 * e2) / delta;
  }
}

Complex parity_project(const SeriesSpec& f, int order, int k, Complex x) {
  require_component(order, k);
  require_series_params(f.tol, f.max_terms);
  if (!f.coeff) throw InvalidArgument("SeriesSpec has no coefficient rule");

  // envelope = x^p / p!; the coefficient multiplies it.
  Complex envelope{1.0, 0.0};
  for (int j = 1; j <= k; ++j) envelope *= x / static_cast<double>(j);

  Complex partial{0.0, 0.0};
  int streak = 0;
  int p = k;
  for (int n = 0; n < f.max_terms; ++n) {
    const Complex a = f.coeff(p);
    const Complex term = a * envelope;
    partial += term;
    if (!std::isfinite(partial.real()) || !std::isfinite(partial.imag())) {
      throw NonFiniteError("parity_project: series overflowed");
    }
    const double bound = f.tol * (1.0 + std::abs(partial));
    // A zero coefficient only counts towards the stop once the envelope itself
    // is negligible; sparse series would otherwise stop before their support.
    const bool small = std::abs(term) < bound && (a != Complex{} || std::abs(envelope) < bound);
    streak = small ? streak + 1 : 0;
    if (streak >= 2) return partial;
    for (int j = 0; j < order; ++j) {
      ++p;
      envelope *= x / static_cast<double>(p);
    }
  }
  throw TruncationError("parity_project: series did not converge", std::abs(envelope));
}

Complex parity_project_rotated(const SeriesSpec& f, int order, int k, Complex x) {
  require_component(order, k);
  if (!f.eval) throw InvalidArgument("SeriesSpec has no direct evaluator");
  Complex sum{0.0, 0.0};
  for (int j = 0; j < order; ++j) {
    sum += cyclic_unit(order, -k * j) * f.eval(cyclic_unit(order, j) * x);
  }
  return sum / static_cast<double>(order);
}

double parity_symmetry_residual(int order, int k, double x) {
  require_component(order, k);
  const Complex w = cyclic_unit(order, 1);
  const Complex rotated = phf_series(order, k, w * x);
  const Complex expected = cyclic_unit(order, k) * phf_series(order, k, Complex{x, 0.0});
  return std::abs(rotated - expected);
}

double tangent(const TangentIndex& t, double x) {
  return checked_ratio(component3(t.numerator(), x), component3(t.denominator(), x),
                       "Eisenstein tangent");
}

double tangent_derivative(const TangentIndex& t, double x) {
  const auto e = components3(x);
  const int m = t.numerator();
  const int n = t.denominator();
  return ratio3(e, m - 1, n) - ratio3(e, n - 1, n) * ratio3(e, m, n);
}

double tangent_reflection_residual(double x) {
  const auto e = components3(x);
  const auto r = components3(-x);
  const double lhs = ratio3(r, 0, 2);
  const double den = ratio3(e, 1, 0) - ratio3(e, 2, 1);
  const double rhs = checked_ratio(ratio3(e, 0, 1) - ratio3(e, 2, 0), den,
                                   "tangent reflection denominator");
  return std::fabs(lhs - rhs);
}

double secant(double x) { return checked_ratio(1.0, component3(0, x), "Eisenstein secant"); }

double secant_increment(double x, double t) {
  const auto [e0, e1, e2] = components3(x);
  const double e0_shift = component3(0, x + t);
  if (std::fabs(e0) < kPoleThreshold || std::fabs(e0_shift) < kPoleThreshold) {
    throw PoleError("Eisenstein secant: pole");
  }
  // e_0(x+t) - e_0(x) = e_0(x)(e_0(t) - 1) + e_2(x) e_1(t) + e_1(x) e_2(t)
  const double e0_tail = series_from(3, 0, t, kDefaultSeriesTol, kDefaultMaxTerms, 1).real();
  const double rise = e0 * e0_tail + e2 * component3(1, t) + e1 * component3(2, t);
  return -rise / (e0 * e0_shift);
}

namespace {

SecantDerivatives five_point(double x, double h) {
  const double dm2 = secant_increment(x, -2.0 * h);
  const double dm1 = secant_increment(x, -h);
  const double dp1 = secant_increment(x, h);
  const double dp2 = secant_increment(x, 2.0 * h);
  // Stencil weights sum to zero, so increments replace the samples exactly.
  SecantDerivatives d;
  d.d1 = (dm2 - 8.0 * dm1 + 8.0 * dp1 - dp2) / (12.0 * h);
  d.d2 = (-dm2 + 16.0 * dm1 + 16.0 * dp1 - dp2) / (12.0 * h * h);
  d.d3 = (-dm2 + 2.0 * dm1 - 2.0 * dp1 + dp2) / (2.0 * h * h * h);
  d.d4 = (dm2 - 4.0 * dm1 - 4.0 * dp1 + dp2) / (h * h * h * h);
  return d;
}

}  // namespace

SecantDerivatives secant_stencil_derivatives(double x, double h) {
  if (!(h > 0.0)) throw InvalidArgument("stencil step must be positive");
  double previous = 0.0;
  for (int i = -2; i <= 2; ++i) {
    const double f = component3(0, x + i * h);
    if (std::fabs(f) < kPoleThreshold || (i > -2 && (f > 0.0) != (previous > 0.0))) {
      throw PoleError("Eisenstein secant: e_0 vanishes inside the stencil");
    }
    previous = f;
  }
  // One Richardson step on the leading error term (h^4 for d1, h^2 otherwise).
  const SecantDerivatives coarse = five_point(x, h);
  const SecantDerivatives fine = five_point(x, 0.5 * h);
  SecantDerivatives d;
  d.d1 = (16.0 * fine.d1 - coarse.d1) / 15.0;
  d.d2 = (4.0 * fine.d2 - coarse.d2) / 3.0;
  d.d3 = (4.0 * fine.d3 - coarse.d3) / 3.0;
  d.d4 = (4.0 * fine.d4 - coarse.d4) / 3.0;
  return d;
}

namespace {

double secant_ode_sum(double x, double h, bool printed) {
  if (!(h >= 1e-4 && h <= 1e-2)) throw InvalidArgument("secant ODE step must lie in [1e-4, 1e-2]");
  const SecantDerivatives d = secant_stencil_derivatives(x, h);
  const auto e = components3(x);
  const double s = checked_ratio(1.0, e[0], "Eisenstein secant");
  const double leading = printed ? d.d4 : d.d3;
  return std::fabs(leading + 3.0 * ratio3(e, 2, 0) * d.d2 + 3.0 * ratio3(e, 1, 0) * d.d1 + s);
}

}  // namespace

double secant_ode_residual(double x, double h) { return secant_ode_sum(x, h, false); }

double secant_ode_residual_printed(double x, double h) { return secant_ode_sum(x, h, true); }

PhfTable phf_table(int order, std::span<const double> xs, double tol, int max_terms) {
  require_component(order, 0);
  require_series_params(tol, max_terms);
  std::vector<double> values(xs.size() * static_cast<std::size_t>(order));
  const auto status =
      kernels::phf_grid(kernels::active_isa(), order, xs, tol, max_terms * order, values);
  if (status.failed_index) {
    throw TruncationError("phf_table: series did not converge at x = " +
                              std::to_string(xs[*status.failed_index]),
                          status.last_term);
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw NonFiniteError("phf_table: component overflowed");
  }
  return PhfTable(order, std::vector<double>(xs.begin(), xs.end()), std::move(values));
}

}  // namespace eisenfun
