#include "eisenfun/core_algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eisenfun/error.hpp"

namespace eisenfun {

namespace {

void require_order(int m) {
  if (m < 2) {
    throw InvalidOrder("cyclic group order must be >= 2, got " + std::to_string(m));
  }
}

}  // namespace

CyclicUnit::CyclicUnit(int order, int power) : order_(order), power_(0) {
  require_order(order);
  power_ = mod_index(power, order);
}

Complex CyclicUnit::value() const { return cyclic_unit(order_, power_); }

CyclicUnit CyclicUnit::operator*(const CyclicUnit& other) const {
  if (other.order_ != order_) {
    throw InvalidArgument("cannot multiply units of different cyclic groups");
  }
  return CyclicUnit(order_, power_ + other.power_);
}

Complex cyclic_unit(int m, int k) {
  require_order(m);
  k = mod_index(k, m);
  if (k == 0) return {1.0, 0.0};
  if (2 * k == m) return {-1.0, 0.0};
  if (m == 3) return k == 1 ? kOmega : kOmega2;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

double eisenstein_norm(double a, double b) {
  const double norm = a * a - a * b + b * b;
  const Complex product = (a + kOmega * b) * (a + kOmega2 * b);
  if (std::abs(product - norm) >= 1e-12 * (1.0 + std::abs(norm))) {
    throw Error("eisenstein_norm: norm form disagrees with (a + wb)(a + w^2 b)");
  }
  return norm;
}

double cubic_sum_residual(double a, double b) {
  const Complex product = (a + b) * (a + kOmega * b) * (a + kOmega2 * b);
  return std::abs(product - (a * a * a + b * b * b));
}

Complex odd_power_product(double a, double b, int n) {
  if (n < 1) {
    throw InvalidOrder("odd_power_product needs n >= 1, got " + std::to_string(n));
  }
  if (n == 1) return {a + b, 0.0};
  Complex product{1.0, 0.0};
  for (int r = 0; r < n; ++r) {
    product *= a + cyclic_unit(n, r) * b;
  }
  return product;
}

}  // namespace eisenfun
