#include "eisenfun/check.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "eisenfun/core_algebra.hpp"
#include "eisenfun/eft.hpp"
#include "eisenfun/fock.hpp"
#include "eisenfun/phf.hpp"
#include "eisenfun/polynomials.hpp"

namespace eisenfun {

namespace {

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> xs;
  const auto count = static_cast<int>(std::lround((hi - lo) / step));
  for (int i = 0; i <= count; ++i) xs.push_back(lo + i * step);
  return xs;
}

double e3(int k, double x) { return phf_series(3, mod_index(k, 3), x).real(); }

double binomial(int n, int r) {
  return factorial_value(n) / (factorial_value(r) * factorial_value(n - r));
}

double series_vs_projection() {
  double worst = 0.0;
  for (int m : {2, 3, 4, 5, 7}) {
    for (double x : grid(-6.0, 6.0, 0.25)) {
      for (int k = 0; k < m; ++k) {
        const double diff = std::abs(phf_series(m, k, x) - phf_projection(m, k, x));
        worst = std::max(worst, diff / (1.0 + std::exp(std::fabs(x))));
      }
    }
  }
  return worst;
}

double exponential_partition() {
  double worst = 0.0;
  for (int m : {2, 3, 4, 5, 7}) {
    for (double x : grid(-6.0, 6.0, 0.25)) {
      Complex sum{};
      for (int k = 0; k < m; ++k) sum += phf_series(m, k, x);
      worst = std::max(worst, std::abs(sum - std::exp(x)) / std::exp(std::fabs(x)));
    }
  }
  return worst;
}

double lattice_symmetry() {
  double worst = 0.0;
  for (double x : grid(-4.0, 4.0, 0.25)) {
    for (int k = 0; k < 3; ++k) worst = std::max(worst, parity_symmetry_residual(3, k, x));
  }
  return worst;
}

double delta_unity() {
  double worst = 0.0;
  for (double x : grid(-4.0, 4.0, 0.125)) worst = std::max(worst, std::fabs(phf_delta(x) - 1.0));
  return worst;
}

double reflection() {
  double worst = 0.0;
  for (double x : grid(0.0, 4.0, 0.125)) {
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::fabs(phf_reflect(k, x) - e3(k, -x)));
  }
  return worst;
}

double fundamental_identity() {
  double worst = 0.0;
  for (double x : grid(-4.0, 4.0, 0.25)) {
    for (int k = 0; k < 3; ++k) worst = std::max(worst, fundamental_identity_residual(k, x));
  }
  return worst;
}

double addition_convolution() {
  double worst = 0.0;
  for (int m : {2, 3, 4}) {
    for (double x : grid(-3.0, 3.0, 0.5)) {
      for (double y : grid(-3.0, 3.0, 0.5)) {
        for (int k = 0; k < m; ++k) {
          const Complex ref = phf_series(m, k, x + y);
          worst = std::max(worst, std::abs(phf_add(m, k, x, y) - ref) / (1.0 + std::abs(ref)));
        }
      }
    }
  }
  return worst;
}

// Printed sum against e_{2k}(x+y), or against e_k(x+y) for k = 1, 2.
double addition_printed(bool against_k) {
  double worst = 0.0;
  for (double x : grid(-3.0, 3.0, 0.5)) {
    for (double y : grid(-3.0, 3.0, 0.5)) {
      for (int k = against_k ? 1 : 0; k < 3; ++k) {
        const int target = against_k ? k : mod_index(2 * k, 3);
        const Complex ref = phf_series(3, target, x + y);
        worst = std::max(worst, std::abs(phf_add_printed(k, x, y) - ref) / (1.0 + std::abs(ref)));
      }
    }
  }
  return worst;
}

double derivative_chain() {
  const double h = 1e-5;
  double worst = 0.0;
  for (int m : {2, 3, 4}) {
    for (double x : grid(-2.0, 2.0, 0.125)) {
      for (int k = 0; k < m; ++k) {
        const double fd = (phf_series(m, k, x + h).real() - phf_series(m, k, x - h).real()) / (2 * h);
        const double exact = phf_derivative(m, k, x).real();
        worst = std::max(worst, std::fabs(fd - exact) / std::max(1.0, std::fabs(exact)));
      }
    }
  }
  return worst;
}

double parity_components() {
  double worst = 0.0;
  const std::array<SeriesSpec, 3> specs = {exp_scaled_series({0.5, 1.0}), cosh_series(),
                                           gaussian_series()};
  for (const auto& f : specs) {
    for (int m : {2, 3, 4}) {
      const Complex w = cyclic_unit(m, 1);
      for (double x : grid(-2.0, 2.0, 0.5)) {
        for (int k = 0; k < m; ++k) {
          const Complex direct = parity_project(f, m, k, x);
          const Complex rotated = parity_project_rotated(f, m, k, x);
          const Complex symmetric = parity_project(f, m, k, w * x);
          worst = std::max(worst, std::abs(direct - rotated));
          worst = std::max(worst, std::abs(symmetric - cyclic_unit(m, k) * direct));
        }
      }
    }
  }
  return worst;
}

double tangent_derivative_fd() {
  const double h = 1e-5;
  double worst = 0.0;
  const std::array<TangentIndex, 3> ts = {TangentIndex(1, 0), TangentIndex(2, 0), TangentIndex(2, 1)};
  for (const auto& t : ts) {
    for (double x : grid(0.25, 3.0, 0.25)) {
      const double fd = (tangent(t, x + h) - tangent(t, x - h)) / (2 * h);
      const double exact = tangent_derivative(t, x);
      worst = std::max(worst, std::fabs(fd - exact) / std::max(1.0, std::fabs(exact)));
    }
  }
  return worst;
}

double tangent_reflection() {
  double worst = 0.0;
  for (double x : grid(0.25, 3.0, 0.25)) worst = std::max(worst, tangent_reflection_residual(x));
  return worst;
}

double secant_ode() {
  double worst = 0.0;
  for (double x : grid(-1.0, 2.0, 0.125)) worst = std::max(worst, secant_ode_residual(x, 1e-3));
  return worst;
}

double gaussian_eft() {
  double worst = 0.0;
  for (double k : grid(0.0, 2.0, 0.25)) {
    for (int m = 0; m < 3; ++m) {
      worst = std::max(worst, std::fabs(eft_component(gaussian, m, k) - gaussian_eft_closed(m, k)));
    }
  }
  return worst;
}

double gaussian_eft_at_zero() {
  return std::abs(eft(gaussian, 0.0, 1) - Complex{1.0 / std::numbers::sqrt2, 0.0});
}

double eft_conjugation() {
  double worst = 0.0;
  for (double k : grid(-2.0, 2.0, 0.5)) {
    worst = std::max(worst, std::abs(eft(gaussian, k, 2) - std::conj(eft(gaussian, k, 1))));
  }
  return worst;
}

double g0_closed() {
  double worst = 0.0;
  for (double x : grid(-2.0, 2.0, 0.5)) {
    for (double y : grid(-2.0, 2.0, 0.5)) {
      worst = std::max(worst, std::fabs(g_component(0, x, y) - g0_closed_form(x, y)));
    }
  }
  return worst;
}

double g_projection() {
  double worst = 0.0;
  for (double x : grid(-2.0, 2.0, 0.5)) {
    for (double y : grid(-2.0, 2.0, 0.5)) {
      for (int j = 0; j < 3; ++j) {
        worst = std::max(worst, std::fabs(g_component(j, x, y) - g_component_projection(j, x, y)));
      }
    }
  }
  return worst;
}

double relative(double diff, double scale) { return diff / std::max(1.0, scale); }

double pseudo_hermite_resummation() {
  double worst = 0.0;
  for (int n = 0; n <= 12; ++n) {
    for (double x : grid(-2.0, 2.0, 0.5)) {
      for (double y : grid(-2.0, 2.0, 0.5)) {
        Complex power{1.0, 0.0};
        for (int i = 0; i < n; ++i) power *= x + kOmega * y;
        Complex sum{};
        for (int j = 0; j < 3; ++j) sum += cyclic_unit(3, j) * pseudo_hermite3(n, x, y, j);
        worst = std::max(worst, relative(std::abs(sum - power), std::abs(power)));
      }
    }
  }
  return worst;
}

double hybrid_laguerre_resummation() {
  double worst = 0.0;
  for (int n = 0; n <= 12; ++n) {
    for (double y : grid(-2.0, 2.0, 0.5)) {
      for (double x : grid(-2.0, 2.0, 0.5)) {
        // (y - omega u)^n with u^r -> x^r / r!
        Complex operational{};
        Complex coeff{1.0, 0.0};
        for (int r = 0; r <= n; ++r) {
          operational += binomial(n, r) * std::pow(y, n - r) * coeff * std::pow(x, r) /
                         factorial_value(r);
          coeff *= -kOmega;
        }
        Complex sum{};
        for (int j = 0; j < 3; ++j) sum += cyclic_unit(3, j) * hybrid_laguerre3(n, y, x, j);
        worst = std::max(worst, relative(std::abs(sum - operational), std::abs(operational)));
      }
    }
  }
  return worst;
}

double eta_resummation() {
  double worst = 0.0;
  for (int n = 0; n <= 12; ++n) {
    for (double x : grid(-2.0, 2.0, 0.5)) {
      for (double y : grid(-2.0, 2.0, 0.5)) {
        const Complex ref = hermite2(n, Complex{x, 0.0}, kOmega * y);
        Complex sum{};
        for (int j = 0; j < 3; ++j) sum += cyclic_unit(3, j) * eta(n, x, y, j);
        worst = std::max(worst, relative(std::abs(sum - ref), std::abs(ref)));
      }
    }
  }
  return worst;
}

double laguerre_operational() {
  double worst = 0.0;
  for (int n = 0; n <= 10; ++n) {
    for (double x : grid(-2.0, 2.0, 0.5)) {
      for (double y : grid(-2.0, 2.0, 0.5)) {
        double operational = 0.0;
        for (int r = 0; r <= n; ++r) {
          operational += binomial(n, r) * std::pow(y, n - r) * std::pow(-1.0, r) * std::pow(x, r) /
                         factorial_value(r);
        }
        worst = std::max(worst, relative(std::fabs(laguerre2(n, x, y) - operational),
                                         std::fabs(operational)));
      }
    }
  }
  return worst;
}

double multi_hermite_consistency() {
  double worst = 0.0;
  for (int n = 0; n <= 15; ++n) {
    for (double x : grid(-2.0, 2.0, 0.5)) {
      for (double y : grid(-2.0, 2.0, 0.5)) {
        const std::array<double, 2> xs = {x, y};
        const double ref = hermite2(n, x, y);
        worst = std::max(worst, relative(std::fabs(hermite_multi(n, xs) - ref), std::fabs(ref)));
      }
    }
  }
  return worst;
}

double exp_decomposition() {
  double worst = 0.0;
  const std::vector<std::vector<double>> points = {
      {0.0, 0.0, 0.0}, {1.0, -0.5, 0.25}, {-1.5, 2.0, 1.0}, {2.0, 1.0, -2.0}, {0.3, 0.7, 1.1}};
  for (int m : {2, 3, 4}) {
    for (const auto& p : points) {
      const std::span<const double> xs(p.data(), static_cast<std::size_t>(m - 1));
      Complex exponent{};
      for (int l = 1; l < m; ++l) exponent += cyclic_unit(m, l) * xs[static_cast<std::size_t>(l - 1)];
      const Complex ref = std::exp(exponent);
      Complex sum{};
      for (int j = 0; j < m; ++j) sum += cyclic_unit(m, j) * g_component_general(m, j, xs);
      worst = std::max(worst, relative(std::abs(sum - ref), std::abs(ref)));
    }
  }
  return worst;
}

double quadrature_commutator() {
  const auto [q, p] = quadratures(12);
  const OperatorMatrix expected = OperatorMatrix::identity(12) * Complex{0.0, -1.0};
  return block_max_deviation(commutator(p, q), expected, 11);
}

double hamiltonian_agreement() {
  const auto forms = hamiltonian_forms(12);
  return block_max_deviation(forms.quadratic, forms.factored, 10);
}

double coherent_norms() {
  double worst = 0.0;
  for (double r : grid(0.0, 1.0, 0.25)) {
    const Complex alpha = std::polar(r, 0.7);
    for (int j = 0; j < 3; ++j) {
      const double norm2 = coherent_component(alpha, j, 60).norm_squared();
      worst = std::max(worst, std::fabs(norm2 - e3(j, r * r)));
    }
  }
  return worst;
}

double cubic_eigen() {
  double worst = 0.0;
  for (double r : grid(0.0, 1.0, 0.25)) {
    for (int j = 0; j < 3; ++j) {
      worst = std::max(worst, cubic_eigencheck(std::polar(r, 0.3), j, 60));
    }
  }
  return worst;
}

double printed_eigen() {
  return std::min(power_j_eigencheck(0.5, 1, 40), power_j_eigencheck(0.5, 2, 40));
}

double cyclic_units() {
  double worst = 0.0;
  for (int m = 2; m <= 12; ++m) {
    Complex sum{};
    for (int k = 0; k < m; ++k) {
      worst = std::max(worst, std::abs(cyclic_unit(m, k) * cyclic_unit(m, m - k) - 1.0));
      sum += cyclic_unit(m, k);
    }
    worst = std::max(worst, std::abs(sum));
  }
  return std::max(worst, std::abs(kOmega * kOmega + kOmega + 1.0));
}

double factorizations() {
  double worst = 0.0;
  for (double a : grid(-3.0, 3.0, 0.5)) {
    for (double b : grid(-3.0, 3.0, 0.5)) {
      worst = std::max(worst, cubic_sum_residual(a, b) / (1.0 + std::fabs(a * a * a + b * b * b)));
      for (int n = 1; n <= 9; n += 2) {
        const double ref = std::pow(a, n) + std::pow(b, n);
        worst = std::max(worst, std::abs(odd_power_product(a, b, n) - ref) /
                                    std::pow(1.0 + std::fabs(a) + std::fabs(b), n));
      }
    }
  }
  return worst;
}

struct Entry {
  const char* name;
  std::function<double()> measure;
  double tolerance;
  bool expected_failure;
  const char* note;
};

}  // namespace

std::vector<CheckResult> run_identity_suite(const SuiteOptions& options) {
  const std::vector<Entry> entries = {
      {"cyclic units: inverses, root sums, omega^2 + omega + 1", cyclic_units, 1e-15, false, ""},
      {"cubic and odd-power factorizations", factorizations, 1e-12, false, ""},
      {"series vs projection, m in {2,3,4,5,7}, |x| <= 6", series_vs_projection, 1e-12, false, ""},
      {"exponential partition sum_k e_k = exp", exponential_partition, 1e-12, false, ""},
      {"lattice symmetry e_k(w x) = w^k e_k(x)", lattice_symmetry, 1e-12, false, ""},
      {"Delta(x) = 1 on [-4, 4]", delta_unity, 1e-10, false, ""},
      {"reflection closed forms vs series at -x", reflection, 1e-10, false, ""},
      {"fundamental identity", fundamental_identity, 1e-12, false, ""},
      {"addition theorem (residue convolution)", addition_convolution, 1e-12, false, ""},
      {"printed addition sum equals e_{2k}(x+y)", [] { return addition_printed(false); }, 1e-12,
       false, ""},
      {"printed addition sum as e_k(x+y), k = 1, 2", [] { return addition_printed(true); }, 1e-12,
       true, "index pairs sum to 2k, not k"},
      {"derivative chain e_k' = e_{k-1} (FD h = 1e-5)", derivative_chain, 1e-7, false, ""},
      {"parity components: series, rotation, symmetry", parity_components, 1e-10, false, ""},
      {"tangent derivative vs FD", tangent_derivative_fd, 1e-6, false, ""},
      {"tangent reflection", tangent_reflection, 1e-10, false, ""},
      {"secant third-order ODE, x in [-1, 2]", secant_ode, 1e-5, false, ""},
      {"secant printed fourth-order ODE at x = 0", [] { return secant_ode_residual_printed(0.0, 1e-3); },
       1e-5, true, "residual ~ 1.0 at x = 0"},
      {"Gaussian EFT components vs closed form", gaussian_eft, 1e-8, false, ""},
      {"Gaussian EFT at k = 0 is 1/sqrt2", gaussian_eft_at_zero, 1e-10, false, ""},
      {"EFT conjugation symmetry", eft_conjugation, 1e-10, false, ""},
      {"g_0 series vs cosh/sinh closed form", g0_closed, 1e-10, false, ""},
      {"g_j series vs projection (w^{-jl})", g_projection, 1e-10, false, ""},
      {"pseudo-Hermite resummation, n <= 12", pseudo_hermite_resummation, 1e-10, false, ""},
      {"hybrid Laguerre operational resummation", hybrid_laguerre_resummation, 1e-10, false, ""},
      {"eta resummation H_n(x, w y)", eta_resummation, 1e-10, false, ""},
      {"Laguerre operational expansion, n <= 10", laguerre_operational, 1e-12, false, ""},
      {"multivariate Hermite p = 2 equals H_n(x, y)", multi_hermite_consistency, 1e-12, false, ""},
      {"exp decomposition into g_j, m in {2,3,4}", exp_decomposition, 1e-10, false, ""},
      {"[p, q] = -i on interior block (N = 12)", quadrature_commutator, 1e-12, false, ""},
      {"[A, A_c] = sqrt3/2 on interior block (N = 12)", [] { return a_commutator_check(12); }, 1e-12,
       false, ""},
      {"H quadratic form = A A_c - sqrt3/4 (N = 12)", hamiltonian_agreement, 1e-12, false, ""},
      {"coherent component norm^2 = e_j(|alpha|^2)", coherent_norms, 1e-10, false, ""},
      {"a^3 eigenrelation of coherent components", cubic_eigen, 1e-10, false, ""},
      {"printed a^j eigenrelation, j = 1, 2, alpha = 0.5", printed_eigen, 1e-10, true,
       "holds for a^3, not a^j"},
  };

  std::vector<CheckResult> results;
  results.reserve(entries.size());
  for (const auto& e : entries) {
    CheckResult r;
    r.name = e.name;
    r.expected_failure = e.expected_failure;
    r.tolerance = (!e.expected_failure && options.tolerance_override) ? *options.tolerance_override
                                                                       : e.tolerance;
    r.note = e.note;
    try {
      r.max_residual = e.measure();
    } catch (const std::exception& ex) {
      r.max_residual = std::numeric_limits<double>::infinity();
      r.errored = true;
      r.note = ex.what();
    }
    if (std::isnan(r.max_residual)) r.max_residual = std::numeric_limits<double>::infinity();
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
}

}  // namespace eisenfun
