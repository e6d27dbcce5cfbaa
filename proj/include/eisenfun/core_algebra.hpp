#pragma once

#include <complex>

namespace eisenfun {

using Complex = std::complex<double>;

inline constexpr double kHalfSqrt3 = 0.86602540378443864676;

// Primitive cube root of unity exp(2*pi*i/3).
inline constexpr Complex kOmega{-0.5, kHalfSqrt3};
inline constexpr Complex kOmega2{-0.5, -kHalfSqrt3};

/// The unit exp(2*pi*i*power/order) of the cyclic group of order `order`.
/// `power` is reduced mod `order` on construction, so CyclicUnit(3, -1) and
/// CyclicUnit(3, 2) compare equal.
class CyclicUnit {
 public:
  CyclicUnit(int order, int power);

  int order() const noexcept { return order_; }
  int power() const noexcept { return power_; }
  Complex value() const;

  CyclicUnit operator*(const CyclicUnit& other) const;
  CyclicUnit inverse() const { return CyclicUnit(order_, -power_); }
  bool operator==(const CyclicUnit&) const = default;

 private:
  int order_;
  int power_;
};

/// exp(2*pi*i*k/m). Throws InvalidOrder for m < 2.
Complex cyclic_unit(int m, int k);

/// Reduce k into [0, m).
constexpr int mod_index(int k, int m) noexcept {
  const int r = k % m;
  return r < 0 ? r + m : r;
}

/// Norm form a^2 - ab + b^2 of the Eisenstein integer a + omega*b. Cross-checked
/// against the complex product (a + omega b)(a + omega^2 b) on every call.
double eisenstein_norm(double a, double b);

/// |a^3 + b^3 - (a + b)(a + omega b)(a + omega^2 b)|, imaginary part of the
/// product included.
double cubic_sum_residual(double a, double b);

/// prod_{r=0}^{n-1} (a + w^r b) with w = exp(2*pi*i/n).
///
/// For odd n this is a^n + b^n; for even n the factor r = n/2 is (a - b) and
/// the product is a^n - b^n. The imaginary part is pure rounding noise.
Complex odd_power_product(double a, double b, int n);

}  // namespace eisenfun
