#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "eisenfun/error.hpp"
#include "eisenfun/polynomials.hpp"
#include "oracles.hpp"

using namespace eisenfun;
using oracle::cld;

namespace {

double rel(double got, long double want) { return oracle::rel_err(got, static_cast<double>(want)); }

}  // namespace

TEST_CASE("factorial_value") {
  CHECK(factorial_value(0) == 1.0);
  CHECK(factorial_value(1) == 1.0);
  CHECK(factorial_value(10) == 3628800.0);
  CHECK(factorial_value(22) == 1124000727777607680000.0);
  CHECK(std::isfinite(factorial_value(170)));
  CHECK_THROWS_AS(factorial_value(171), RangeError);
  CHECK_THROWS_AS(factorial_value(-1), RangeError);
  for (int n = 1; n <= 170; ++n) {
    CHECK(factorial_value(n) / factorial_value(n - 1) == doctest::Approx(n).epsilon(1e-14));
  }
}

TEST_CASE("hermite2 against the three-term recurrence") {
  for (int n = 0; n <= 20; ++n) {
    for (double x = -2.0; x <= 2.0; x += 0.5) {
      for (double y = -2.0; y <= 2.0; y += 0.5) {
        const long double want = oracle::hermite2(n, cld{x, 0}, cld{y, 0}).real();
        CHECK(std::fabs(hermite2(n, x, y) - static_cast<double>(want)) <
              1e-12 * (1.0 + std::fabs(static_cast<double>(want)) + std::pow(4.0, n / 2.0) * factorial_value(n / 2)));
      }
    }
  }
  CHECK(hermite2(0, 3.0, 4.0) == 1.0);
  CHECK(hermite2(1, 3.0, 4.0) == 3.0);
  CHECK(hermite2(2, 3.0, 4.0) == 9.0 + 8.0);
  CHECK_THROWS_AS(hermite2(-1, 1.0, 1.0), RangeError);
  CHECK_THROWS_AS(hermite2(kMaxPolynomialDegree + 1, 1.0, 1.0), RangeError);
}

TEST_CASE("complex hermite2") {
  const Complex x{0.3, -1.1};
  const Complex y{-0.7, 0.4};
  for (int n = 0; n <= 15; ++n) {
    const cld w = oracle::hermite2(n, cld{x.real(), x.imag()}, cld{y.real(), y.imag()});
    const Complex want{static_cast<double>(w.real()), static_cast<double>(w.imag())};
    CHECK(std::abs(hermite2(n, x, y) - want) < 1e-11 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("laguerre2 against std::laguerre") {
  for (int n = 0; n <= 12; ++n) {
    for (double x = -2.0; x <= 2.0; x += 0.5) {
      for (double y : {-2.0, -0.5, 0.5, 1.0, 2.0}) {
        if (x / y >= 0.0) {
          const double want = std::pow(y, n) * std::laguerre(static_cast<unsigned>(n), x / y);
          CHECK(oracle::rel_err(laguerre2(n, x, y), want) < 1e-10);
        }
        CHECK(rel(laguerre2(n, x, y), oracle::laguerre2(n, cld{x, 0}, cld{y, 0}).real()) < 1e-12);
      }
    }
  }
  CHECK(laguerre2(3, 0.0, 2.0) == 8.0);
}

TEST_CASE("pseudo-Hermite is the omega part of (x + w y)^n") {
  for (int n = 0; n <= 12; ++n) {
    for (double x = -2.0; x <= 2.0; x += 0.5) {
      for (double y = -2.0; y <= 2.0; y += 0.5) {
        double sum_check = 0.0;
        for (int j = 0; j < 3; ++j) {
          const double want = oracle::omega_part(j, [&](cld w) {
            return std::pow(cld{x, 0} + w * static_cast<long double>(y), n);
          });
          const double got = pseudo_hermite3(n, x, y, j);
          CHECK(oracle::rel_err(got, want) < 1e-10);
          sum_check += got;
        }
        // At w = 1 the three parts add back to (x + y)^n.
        CHECK(oracle::rel_err(sum_check, std::pow(x + y, n)) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(pseudo_hermite3(2, 1.0, 1.0, 3), InvalidOrder);
}

TEST_CASE("hybrid Laguerre is the omega part of L_n(w x, y)") {
  for (int n = 0; n <= 12; ++n) {
    for (double x = -2.0; x <= 2.0; x += 0.5) {
      for (double y = -2.0; y <= 2.0; y += 0.5) {
        for (int j = 0; j < 3; ++j) {
          const double want = oracle::omega_part(j, [&](cld w) {
            return oracle::laguerre2(n, w * static_cast<long double>(x), cld{y, 0});
          });
          CHECK(oracle::rel_err(hybrid_laguerre3(n, y, x, j), want) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("eta is the omega part of H_n(x, w y)") {
  for (int n = 0; n <= 12; ++n) {
    for (double x = -2.0; x <= 2.0; x += 0.5) {
      for (double y = -2.0; y <= 2.0; y += 0.5) {
        for (int j = 0; j < 3; ++j) {
          const double want = oracle::omega_part(j, [&](cld w) {
            return oracle::hermite2(n, cld{x, 0}, w * static_cast<long double>(y));
          });
          CHECK(oracle::rel_err(eta(n, x, y, j), want) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("g components") {
  CHECK(g_component(0, 1.0, 1.0) == doctest::Approx(2.708271660424511623).epsilon(1e-14));
  CHECK(g0_closed_form(1.0, 1.0) == doctest::Approx(2.708271660424511623).epsilon(1e-14));
  for (double x = -2.0; x <= 2.0; x += 0.5) {
    for (double y = -2.0; y <= 2.0; y += 0.5) {
      CHECK(std::fabs(g_component(0, x, y) - g0_closed_form(x, y)) < 1e-10);
      for (int j = 0; j < 3; ++j) {
        long double want = 0.0L;
        for (int n = j; n <= 90; n += 3) {
          want += oracle::hermite2(n, cld{x, 0}, cld{y, 0}).real() / oracle::factorial(n);
        }
        CHECK(rel(g_component(j, x, y), want) < 1e-12);
        CHECK(std::fabs(g_component(j, x, y) - g_component_projection(j, x, y)) < 1e-10);
      }
      // g_0 + w g_1 + w^2 g_2 = exp(w x + w^2 y).
      const Complex lhs = g_component(0, x, y) + kOmega * g_component(1, x, y) +
                          kOmega2 * g_component(2, x, y);
      CHECK(std::abs(lhs - std::exp(kOmega * x + kOmega2 * y)) < 1e-12 * (1.0 + std::exp(2.0 * (std::fabs(x) + std::fabs(y)))));
    }
  }
  CHECK_THROWS_AS(g_component(3, 1.0, 1.0), InvalidOrder);
  CHECK_THROWS_AS(g_component(0, 1.0, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("hermite_multi against generating-function coefficients") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (std::size_t p = 1; p <= 4; ++p) {
    std::vector<double> xs(p);
    for (auto& v : xs) v = u(rng);
    const auto c = oracle::multi_hermite_coeffs(20, xs);
    for (int n = 0; n <= 20; ++n) {
      const long double want = c[static_cast<std::size_t>(n)] * oracle::factorial(n);
      CHECK(std::fabs(hermite_multi(n, xs) - static_cast<double>(want)) <
            1e-11 * (1.0 + std::fabs(static_cast<double>(want))));
    }
  }
  const std::vector<double> one{2.5};
  CHECK(hermite_multi(3, one) == doctest::Approx(15.625));
  const std::vector<double> none;
  CHECK_THROWS_AS(hermite_multi(2, none), InvalidArgument);
}

TEST_CASE("hermite_multi with two variables is hermite2") {
  for (int n = 0; n <= 15; ++n) {
    for (double x = -2.0; x <= 2.0; x += 1.0) {
      for (double y = -2.0; y <= 2.0; y += 1.0) {
        const std::vector<double> xs{x, y};
        CHECK(hermite_multi(n, xs) == doctest::Approx(hermite2(n, x, y)).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("general g components decompose the exponential") {
  for (int m : {2, 3, 4}) {
    std::vector<double> xs(static_cast<std::size_t>(m - 1));
    for (std::size_t l = 0; l < xs.size(); ++l) xs[l] = 0.4 * static_cast<double>(l + 1) - 0.3;
    Complex arg{0.0, 0.0};
    for (std::size_t l = 0; l < xs.size(); ++l) arg += cyclic_unit(m, static_cast<int>(l + 1)) * xs[l];
    Complex sum{0.0, 0.0};
    const auto c = oracle::multi_hermite_coeffs(120, xs);
    for (int j = 0; j < m; ++j) {
      const Complex g = g_component_general(m, j, xs);
      long double want = 0.0L;
      for (int n = j; n <= 120; n += m) want += c[static_cast<std::size_t>(n)];
      CHECK(std::abs(g - static_cast<double>(want)) < 1e-12);
      sum += cyclic_unit(m, j) * g;
    }
    CHECK(std::abs(sum - std::exp(arg)) < 1e-10);
  }
  const std::vector<double> xs{1.0};
  CHECK_THROWS_AS(g_component_general(3, 0, xs), InvalidArgument);
  CHECK_THROWS_AS(g_component_general(1, 0, xs), InvalidOrder);
}
