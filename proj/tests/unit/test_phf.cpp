#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "eisenfun/error.hpp"
#include "eisenfun/phf.hpp"
#include "oracles.hpp"

using namespace eisenfun;

namespace {

double re(int m, int k, double x) { return phf_series(m, k, Complex{x, 0.0}).real(); }

}  // namespace

TEST_CASE("frozen high-precision values, order 3") {
  CHECK(re(3, 0, 1.0) == doctest::Approx(1.168058313375918525).epsilon(1e-15));
  CHECK(re(3, 1, 1.0) == doctest::Approx(1.041865355098909846).epsilon(1e-15));
  CHECK(re(3, 2, 1.0) == doctest::Approx(0.508358159984216864).epsilon(1e-15));
  CHECK(re(3, 0, 2.0) == doctest::Approx(2.423641733185364535).epsilon(1e-15));
  CHECK(re(3, 0, -1.0) == doctest::Approx(0.834719468577210962).epsilon(1e-15));
  CHECK(re(3, 1, -1.0) == doctest::Approx(-0.958531470619096444).epsilon(1e-15));
  CHECK(re(3, 2, -1.0) == doctest::Approx(0.491691443213327803).epsilon(1e-15));
  CHECK(re(4, 1, 1.0) == doctest::Approx(1.008336089225848982).epsilon(1e-15));
}

TEST_CASE("frozen values at x = -8 keep about 11 digits") {
  CHECK(re(3, 0, -8.0) == doctest::Approx(29.0859655852177).epsilon(1e-11));
  CHECK(re(3, 1, -8.0) == doctest::Approx(-33.4943979885002).epsilon(1e-11));
  CHECK(re(3, 2, -8.0) == doctest::Approx(4.40876786591038).epsilon(1e-11));
}

TEST_CASE("order 2 is cosh and sinh") {
  CHECK(re(2, 0, 1.0) == doctest::Approx(1.543080634815243778).epsilon(1e-15));
  CHECK(re(2, 1, 1.0) == doctest::Approx(1.175201193643801457).epsilon(1e-15));
  for (double x = -5.0; x <= 5.0; x += 0.5) {
    CHECK(oracle::rel_err(re(2, 0, x), std::cosh(x)) < 1e-14);
    CHECK(oracle::rel_err(re(2, 1, x), std::sinh(x)) < 1e-14);
  }
}

TEST_CASE("series matches the long-double multisection oracle") {
  for (int m : {2, 3, 4, 5, 7}) {
    for (int k = 0; k < m; ++k) {
      for (double x = -6.0; x <= 6.0; x += 0.25) {
        CHECK(std::fabs(re(m, k, x) - oracle::multisection(m, k, x)) <
              1e-13 * (1.0 + std::exp(std::fabs(x))));
      }
    }
  }
}

TEST_CASE("series vs projection at complex arguments") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const Complex z{u(rng), u(rng)};
    for (int m : {2, 3, 5}) {
      for (int k = 0; k < m; ++k) {
        const Complex a = phf_series(m, k, z);
        const Complex b = phf_projection(m, k, z);
        CHECK(std::abs(a - b) < 1e-12 * (1.0 + std::exp(std::abs(z))));
      }
    }
  }
}

TEST_CASE("value at zero") {
  for (int m = 2; m <= 6; ++m) {
    CHECK(re(m, 0, 0.0) == 1.0);
    for (int k = 1; k < m; ++k) CHECK(re(m, k, 0.0) == 0.0);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(phf_series(1, 0, Complex{1.0, 0.0}), InvalidOrder);
  CHECK_THROWS_AS(phf_series(3, 3, Complex{1.0, 0.0}), InvalidOrder);
  CHECK_THROWS_AS(phf_series(3, -1, Complex{1.0, 0.0}), InvalidOrder);
  CHECK_THROWS_AS(phf_series(3, 0, Complex{1.0, 0.0}, 0.0), InvalidArgument);
  CHECK_THROWS_AS(phf_series(3, 0, Complex{1.0, 0.0}, 1e-14, 0), InvalidArgument);
  CHECK_THROWS_AS(phf_components(0, Complex{1.0, 0.0}), InvalidOrder);
  CHECK_THROWS_AS(exp_unit_closed(1.0, 0), InvalidArgument);
  CHECK_THROWS_AS(TangentIndex(1, 1), InvalidArgument);
  CHECK_THROWS_AS(TangentIndex(3, 0), InvalidArgument);
}

TEST_CASE("term cap raises TruncationError") {
  CHECK_THROWS_AS(phf_series(3, 0, Complex{30.0, 0.0}, 1e-14, 5), TruncationError);
}

TEST_CASE("components partition the exponential") {
  for (int m : {2, 3, 4, 5, 7}) {
    for (double x = -6.0; x <= 6.0; x += 0.25) {
      const PhfComponents c = phf_components(m, Complex{x, 0.0});
      REQUIRE(c.values.size() == static_cast<std::size_t>(m));
      Complex sum{0.0, 0.0};
      for (const Complex& v : c.values) sum += v;
      CHECK(std::abs(sum - std::exp(x)) < 1e-12 * std::exp(std::fabs(x)));
    }
  }
}

TEST_CASE("exp(omega x) decomposes over the components") {
  for (double x = -3.0; x <= 3.0; x += 0.5) {
    const Complex lhs = exp_unit_closed(x, 1);
    const Complex rhs = re(3, 0, x) + kOmega * re(3, 1, x) + kOmega2 * re(3, 2, x);
    CHECK(std::abs(lhs - rhs) < 1e-13 * (1.0 + std::exp(std::fabs(x))));
    CHECK(std::abs(lhs - std::exp(kOmega * x)) < 1e-14 * (1.0 + std::exp(std::fabs(x))));
    CHECK(exp_unit_closed(x, 2) == std::conj(lhs));
  }
  const Complex v = exp_unit_closed(1.0, 1);
  CHECK(v.real() == doctest::Approx(0.392946555834355171).epsilon(1e-15));
  CHECK(v.imag() == doctest::Approx(0.462030784071105284).epsilon(1e-15));
}

TEST_CASE("lattice symmetry e_k(w x) = w^k e_k(x)") {
  for (int k = 0; k < 3; ++k) {
    for (double x = -4.0; x <= 4.0; x += 0.25) CHECK(parity_symmetry_residual(3, k, x) < 1e-12);
  }
  for (int m : {4, 5}) {
    for (int k = 0; k < m; ++k) CHECK(parity_symmetry_residual(m, k, 1.5) < 1e-12);
  }
}

TEST_CASE("derivative chain") {
  for (int m : {2, 3, 4}) {
    for (int k = 0; k < m; ++k) {
      for (double x = -2.0; x <= 2.0; x += 0.25) {
        const double h = 1e-5;
        const double fd = (re(m, k, x + h) - re(m, k, x - h)) / (2.0 * h);
        const double want = phf_derivative(m, k, Complex{x, 0.0}).real();
        CHECK(want == re(m, mod_index(k - 1, m), x));
        CHECK(std::fabs(fd - want) < 1e-7 * std::max(1.0, std::fabs(want)));
      }
    }
  }
}

TEST_CASE("Delta(x) is identically one") {
  for (double x = -4.0; x <= 4.0; x += 0.125) CHECK(std::fabs(phf_delta(x) - 1.0) < 1e-10);
}

TEST_CASE("reflection closed forms match series at -x") {
  for (int k = 0; k < 3; ++k) {
    for (double x = 0.0; x <= 4.0; x += 0.25) {
      CHECK(std::fabs(phf_reflect(k, x) - oracle::multisection(3, k, -x)) < 1e-10);
    }
  }
}

TEST_CASE("fundamental identity") {
  for (int k = 0; k < 3; ++k) {
    for (double x = -4.0; x <= 4.0; x += 0.25) CHECK(fundamental_identity_residual(k, x) < 1e-12);
  }
}

TEST_CASE("addition theorem, convolution form") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 60; ++i) {
    const double x = u(rng);
    const double y = u(rng);
    for (int m : {2, 3, 4}) {
      for (int k = 0; k < m; ++k) {
        const double got = phf_add(m, k, Complex{x, 0.0}, Complex{y, 0.0}).real();
        CHECK(oracle::rel_err(got, oracle::multisection(m, k, x + y)) < 1e-12);
      }
    }
  }
}

TEST_CASE("printed addition shape gives the 2k component") {
  for (double x = -3.0; x <= 3.0; x += 1.5) {
    for (double y = -3.0; y <= 3.0; y += 1.5) {
      for (int k = 0; k < 3; ++k) {
        const double got = phf_add_printed(k, Complex{x, 0.0}, Complex{y, 0.0}).real();
        CHECK(oracle::rel_err(got, oracle::multisection(3, (2 * k) % 3, x + y)) < 1e-12);
      }
    }
  }
  // For k = 1 it is not e_1(x + y).
  const double wrong = phf_add_printed(1, Complex{1.0, 0.0}, Complex{1.0, 0.0}).real();
  CHECK(std::fabs(wrong - re(3, 1, 2.0)) > 0.1);
}

TEST_CASE("parity projection of builtin series") {
  const SeriesSpec e = exp_scaled_series();
  const SeriesSpec ch = cosh_series();
  const SeriesSpec g = gaussian_series();
  for (double x = -2.0; x <= 2.0; x += 0.5) {
    const Complex z{x, 0.0};
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(parity_project(e, 3, k, z) - oracle::multisection(3, k, x)) < 1e-13);
      CHECK(std::abs(parity_project(e, 3, k, z) - parity_project_rotated(e, 3, k, z)) < 1e-12);
      CHECK(std::abs(parity_project(g, 3, k, z) - parity_project_rotated(g, 3, k, z)) < 1e-12);
    }
    // Order 2 applied to exp returns cosh, sinh.
    CHECK(parity_project(e, 2, 0, z).real() == doctest::Approx(std::cosh(x)).epsilon(1e-14));
    CHECK(parity_project(e, 2, 1, z).real() == doctest::Approx(std::sinh(x)).epsilon(1e-14));
  }
  // cosh has only even-index coefficients; at x = 1 its k = 0 part in the
  // order-3 split is sum over n = 0 mod 6.
  CHECK(parity_project(ch, 3, 0, Complex{1.0, 0.0}).real() ==
        doctest::Approx(1.001388890976564744).epsilon(1e-15));
}

TEST_CASE("parity projection sums back to f") {
  const SeriesSpec g = gaussian_series();
  for (int m : {2, 3, 5}) {
    for (double x = -2.0; x <= 2.0; x += 0.25) {
      Complex s{0.0, 0.0};
      for (int k = 0; k < m; ++k) s += parity_project(g, m, k, Complex{x, 0.0});
      CHECK(std::abs(s - std::exp(-x * x)) < 1e-13);
    }
  }
}

TEST_CASE("monomial projection lands in one slot") {
  const SeriesSpec p = monomial_series(4);
  for (int k = 0; k < 3; ++k) {
    const double v = parity_project(p, 3, k, Complex{1.5, 0.0}).real();
    CHECK(v == doctest::Approx(k == 1 ? std::pow(1.5, 4) : 0.0).epsilon(1e-14));
  }
}

TEST_CASE("rotation route needs an evaluator") {
  SeriesSpec s = monomial_series(2);
  s.eval = nullptr;
  CHECK_THROWS_AS(parity_project_rotated(s, 3, 0, Complex{1.0, 0.0}), InvalidArgument);
  SeriesSpec none;
  CHECK_THROWS_AS(parity_project(none, 3, 0, Complex{1.0, 0.0}), InvalidArgument);
}

TEST_CASE("tangents") {
  const TangentIndex t10(1, 0);
  CHECK(tangent(t10, 1.0) == doctest::Approx(0.891963477480600963).epsilon(1e-15));
  CHECK_THROWS_AS(tangent(TangentIndex(0, 1), 0.0), PoleError);
  CHECK_THROWS_AS(tangent(TangentIndex(1, 2), 0.0), PoleError);
  CHECK(tangent(TangentIndex(1, 0), 0.0) == 0.0);
}

TEST_CASE("tangent derivative against finite differences") {
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      const TangentIndex t(a, b);
      for (double x = 0.25; x <= 2.0; x += 0.25) {
        const double h = 1e-5;
        const double fd = (tangent(t, x + h) - tangent(t, x - h)) / (2.0 * h);
        const double d = tangent_derivative(t, x);
        CHECK(std::fabs(fd - d) < 1e-6 * std::max(1.0, std::fabs(d)));
      }
    }
  }
}

TEST_CASE("tangent reflection") {
  for (double x = 0.25; x <= 2.0; x += 0.25) CHECK(tangent_reflection_residual(x) < 1e-10);
  CHECK_THROWS_AS(tangent_reflection_residual(0.0), PoleError);
}

TEST_CASE("secant") {
  CHECK(secant(0.0) == 1.0);
  CHECK(secant(1.0) == doctest::Approx(0.856121640973388642).epsilon(1e-15));
  CHECK(std::fabs(secant(5.0)) < 0.05);
  for (double x = -1.0; x <= 3.0; x += 0.5) {
    for (double t : {-1e-3, 1e-6, 0.3}) {
      const double want = oracle::secant_jet(x + t).s - oracle::secant_jet(x).s;
      CHECK(std::fabs(secant_increment(x, t) - want) < 1e-15 + 1e-12 * std::fabs(want));
    }
  }
}

TEST_CASE("secant stencils agree with closed-form derivatives") {
  for (double x = -1.0; x <= 2.0; x += 0.25) {
    const auto d = secant_stencil_derivatives(x, 1e-3);
    const auto j = oracle::secant_jet(x);
    CHECK(std::fabs(d.d1 - j.d1) < 1e-8);
    CHECK(std::fabs(d.d2 - j.d2) < 1e-7);
    CHECK(std::fabs(d.d3 - j.d3) < 1e-6);
  }
}

TEST_CASE("secant third-order ODE") {
  for (double x = -1.0; x <= 2.0; x += 0.125) CHECK(secant_ode_residual(x, 1e-3) < 1e-5);
  CHECK_THROWS_AS(secant_ode_residual(0.0, 1e-6), InvalidArgument);
  CHECK_THROWS_AS(secant_ode_residual(0.0, 0.1), InvalidArgument);
}

TEST_CASE("printed fourth-order secant ODE leaves residual one at zero") {
  CHECK(std::fabs(secant_ode_residual_printed(0.0, 1e-3) - 1.0) < 1e-3);
}

TEST_CASE("secant stencil refuses to straddle a zero of e_0") {
  // e_0 changes sign near x = -1.8502.
  CHECK_THROWS_AS(secant_stencil_derivatives(-1.8502, 1e-3), PoleError);
}

TEST_CASE("phf_table matches per-point series") {
  std::vector<double> xs;
  for (double x = -6.0; x <= 6.0; x += 0.1) xs.push_back(x);
  for (int m : {2, 3, 4, 7}) {
    const PhfTable t = phf_table(m, xs);
    REQUIRE(t.size() == xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(t.x(i) == xs[i]);
      for (int k = 0; k < m; ++k) {
        CHECK(std::fabs(t.at(i, k) - re(m, k, xs[i])) < 1e-13 * (1.0 + std::exp(std::fabs(xs[i]))));
      }
    }
  }
  CHECK_THROWS_AS(phf_table(1, xs), InvalidOrder);
  const std::vector<double> far{200.0};
  CHECK_THROWS_AS(phf_table(3, far, 1e-14, 5), TruncationError);
}
