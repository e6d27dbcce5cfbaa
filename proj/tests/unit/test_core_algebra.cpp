#include <doctest.h>

#include <cmath>
#include <random>

#include "eisenfun/core_algebra.hpp"
#include "eisenfun/error.hpp"

using namespace eisenfun;

TEST_CASE("omega constants") {
  CHECK(kOmega.real() == -0.5);
  CHECK(kOmega2 == std::conj(kOmega));
  CHECK(std::abs(1.0 + kOmega + kOmega2) < 1e-16);
  CHECK(std::abs(kOmega * kOmega * kOmega - 1.0) < 1e-15);
  CHECK(std::abs(kOmega * kOmega - kOmega2) < 2e-16);
}

TEST_CASE("cyclic_unit against polar form") {
  for (int m = 2; m <= 12; ++m) {
    for (int k = -2 * m; k <= 2 * m; ++k) {
      const Complex want = std::polar(1.0, 2.0 * M_PI * k / m);
      CHECK(std::abs(cyclic_unit(m, k) - want) < 4e-15);
    }
  }
}

TEST_CASE("cyclic_unit exact special cases") {
  CHECK(cyclic_unit(3, 1) == kOmega);
  CHECK(cyclic_unit(3, 2) == kOmega2);
  CHECK(cyclic_unit(3, -1) == kOmega2);
  CHECK(cyclic_unit(7, 0) == Complex{1.0, 0.0});
  CHECK(cyclic_unit(4, 2) == Complex{-1.0, 0.0});
  CHECK(cyclic_unit(2, 1) == Complex{-1.0, 0.0});
}

TEST_CASE("cyclic_unit rejects orders below 2") {
  CHECK_THROWS_AS(cyclic_unit(1, 0), InvalidOrder);
  CHECK_THROWS_AS(cyclic_unit(0, 0), InvalidOrder);
  CHECK_THROWS_AS(cyclic_unit(-3, 1), InvalidOrder);
  CHECK_THROWS_AS(CyclicUnit(1, 0), InvalidOrder);
}

TEST_CASE("CyclicUnit group law") {
  for (int m = 2; m <= 9; ++m) {
    for (int a = 0; a < m; ++a) {
      const CyclicUnit u(m, a);
      CHECK(u * u.inverse() == CyclicUnit(m, 0));
      CHECK(std::abs(u.inverse().value() - std::conj(u.value())) < 1e-15);
      for (int b = 0; b < m; ++b) {
        const CyclicUnit v(m, b);
        CHECK(std::abs((u * v).value() - u.value() * v.value()) < 1e-14);
      }
    }
  }
  CHECK(CyclicUnit(3, -1) == CyclicUnit(3, 2));
  CHECK(CyclicUnit(5, 12).power() == 2);
}

TEST_CASE("roots of unity sum to zero") {
  for (int m = 2; m <= 16; ++m) {
    Complex s{0.0, 0.0};
    for (int k = 0; k < m; ++k) s += cyclic_unit(m, k);
    CHECK(std::abs(s) < 1e-14);
  }
}

TEST_CASE("mod_index") {
  static_assert(mod_index(-1, 3) == 2);
  static_assert(mod_index(7, 3) == 1);
  static_assert(mod_index(0, 5) == 0);
  static_assert(mod_index(-6, 3) == 0);
}

TEST_CASE("eisenstein_norm") {
  CHECK(eisenstein_norm(1.0, 0.0) == 1.0);
  CHECK(eisenstein_norm(1.0, 1.0) == 1.0);
  CHECK(eisenstein_norm(2.0, 1.0) == 3.0);
  CHECK(eisenstein_norm(3.0, -2.0) == 19.0);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const double n = eisenstein_norm(a, b);
    CHECK(n >= 0.0);
    CHECK(std::fabs(n - std::norm(a + kOmega * b)) < 1e-12 * (1.0 + n));
  }
}

TEST_CASE("cubic sum factorization") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const double scale = 1.0 + std::fabs(a * a * a) + std::fabs(b * b * b);
    CHECK(cubic_sum_residual(a, b) < 1e-13 * scale);
  }
}

TEST_CASE("odd_power_product") {
  CHECK(odd_power_product(2.0, 5.0, 1) == Complex{7.0, 0.0});
  CHECK_THROWS_AS(odd_power_product(1.0, 1.0, 0), InvalidOrder);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 2; n <= 9; ++n) {
    for (int i = 0; i < 20; ++i) {
      const double a = u(rng);
      const double b = u(rng);
      const double want = std::pow(a, n) + (n % 2 ? 1.0 : -1.0) * std::pow(b, n);
      const Complex got = odd_power_product(a, b, n);
      const double scale = 1.0 + std::pow(std::fabs(a) + std::fabs(b), n);
      CHECK(std::fabs(got.real() - want) < 1e-13 * scale);
      CHECK(std::fabs(got.imag()) < 1e-13 * scale);
    }
  }
}
