#include "eisenfun/polynomials.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "eisenfun/error.hpp"

namespace eisenfun {

namespace {

constexpr int kMaxFactorial = 170;

const std::array<double, kMaxFactorial + 1>& factorial_table() {
  static const auto table = [] {
    std::array<double, kMaxFactorial + 1> t{};
    t[0] = 1.0;
    for (int n = 1; n <= kMaxFactorial; ++n) {
      t[static_cast<std::size_t>(n)] = t[static_cast<std::size_t>(n - 1)] * n;
    }
    return t;
  }();
  return table;
}

inline double fact(int n) { return factorial_table()[static_cast<std::size_t>(n)]; }

void require_degree(int n) {
  if (n < 0 || n > kMaxPolynomialDegree) {
    throw RangeError("polynomial degree " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxPolynomialDegree) + "]");
  }
}

void require_cyclic_index(int j) {
  if (j < 0 || j > 2) throw InvalidOrder("cyclic component index must be 0, 1 or 2");
}

template <class T>
T ipow(T base, int e) {
  T result{1.0};
  for (; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    base *= base;
  }
  return result;
}

template <class T>
T hermite2_impl(int n, T x, T y) {
  require_degree(n);
  T sum{0.0};
  for (int r = 0; 2 * r <= n; ++r) {
    sum += ipow(x, n - 2 * r) * ipow(y, r) * (fact(n) / (fact(n - 2 * r) * fact(r)));
  }
  return sum;
}

// H_N(x, y) / N!, usable past the degree cap (denominators stay <= 170!).
double hermite2_scaled(int big_n, double x, double y) {
  double sum = 0.0;
  for (int r = 0; 2 * r <= big_n; ++r) {
    sum += ipow(x, big_n - 2 * r) * ipow(y, r) / (fact(big_n - 2 * r) * fact(r));
  }
  return sum;
}

// Memo of S_N^{(p)} = H_N^{(p)}(x_1..x_p) / N! for one argument list:
//   S_N^{(1)} = x_1^N / N!,  S_N^{(p)} = sum_r x_p^r / r! * S_{N-pr}^{(p-1)}.
class ScaledMultiHermite {
 public:
  explicit ScaledMultiHermite(std::span<const double> xs)
      : xs_(xs.begin(), xs.end()), memo_(xs.size() + 1) {}

  double get(int big_n) { return at(big_n, static_cast<int>(xs_.size())); }

 private:
  double at(int big_n, int p) {
    if (big_n > kMaxFactorial) {
      throw RangeError("multivariate Hermite degree beyond factorial range");
    }
    auto& row = memo_[static_cast<std::size_t>(p)];
    if (row.size() <= static_cast<std::size_t>(big_n)) row.resize(static_cast<std::size_t>(big_n) + 1);
    auto& slot = row[static_cast<std::size_t>(big_n)];
    if (slot) return *slot;
    double value = 0.0;
    if (p == 1) {
      value = ipow(xs_[0], big_n) / fact(big_n);
    } else {
      const double xp = xs_[static_cast<std::size_t>(p - 1)];
      for (int r = 0; p * r <= big_n; ++r) {
        value += ipow(xp, r) / fact(r) * at(big_n - p * r, p - 1);
      }
    }
    slot = value;
    return value;
  }

  std::vector<double> xs_;
  std::vector<std::vector<std::optional<double>>> memo_;
};

// Unscaled recursion, memoized over (n, p) for one call tree.
class MultiHermite {
 public:
  explicit MultiHermite(std::span<const double> xs) : xs_(xs), memo_(xs.size() + 1) {}

  double at(int n, int p) {
    auto& row = memo_[static_cast<std::size_t>(p)];
    if (row.size() <= static_cast<std::size_t>(n)) row.resize(static_cast<std::size_t>(n) + 1);
    auto& slot = row[static_cast<std::size_t>(n)];
    if (slot) return *slot;
    double value = 0.0;
    if (p == 1) {
      value = ipow(xs_[0], n);
    } else {
      const double xp = xs_[static_cast<std::size_t>(p - 1)];
      for (int r = 0; p * r <= n; ++r) {
        value += ipow(xp, r) * at(n - p * r, p - 1) * (fact(n) / (fact(n - p * r) * fact(r)));
      }
    }
    slot = value;
    return value;
  }

 private:
  std::span<const double> xs_;
  std::vector<std::vector<std::optional<double>>> memo_;
};

// sum_n term(modulus*n + j), stopped on the dominating envelope so that
// vanishing terms do not end the sum early.
template <class Term, class Envelope>
double grouped_series(int modulus, int j, double tol, Term term, Envelope envelope,
                      const char* what) {
  double partial = 0.0;
  int streak = 0;
  double last = 0.0;
  for (int big_n = j; big_n <= kMaxFactorial; big_n += modulus) {
    const double t = term(big_n);
    partial += t;
    if (!std::isfinite(partial)) throw NonFiniteError(std::string(what) + ": series overflowed");
    last = envelope(big_n);
    streak = last < tol * (1.0 + std::fabs(partial)) ? streak + 1 : 0;
    if (streak >= 2) return partial;
  }
  throw TruncationError(std::string(what) + ": series did not converge before degree 170", last);
}

}  // namespace

double factorial_value(int n) {
  if (n < 0 || n > kMaxFactorial) throw RangeError("factorial argument outside [0, 170]");
  return fact(n);
}

double hermite2(int n, double x, double y) { return hermite2_impl<double>(n, x, y); }

Complex hermite2(int n, Complex x, Complex y) { return hermite2_impl<Complex>(n, x, y); }

double pseudo_hermite3(int n, double x, double y, int j) {
  require_degree(n);
  require_cyclic_index(j);
  double sum = 0.0;
  for (int s = j; s <= n; s += 3) {
    sum += ipow(x, n - s) * ipow(y, s) * (fact(n) / (fact(n - s) * fact(s)));
  }
  return sum;
}

double laguerre2(int n, double x, double y) {
  require_degree(n);
  double sum = 0.0;
  for (int r = 0; r <= n; ++r) {
    const double sign = r % 2 == 0 ? 1.0 : -1.0;
    sum += sign * ipow(y, n - r) * ipow(x, r) * (fact(n) / (fact(n - r) * fact(r) * fact(r)));
  }
  return sum;
}

double hybrid_laguerre3(int n, double y, double x, int j) {
  require_degree(n);
  require_cyclic_index(j);
  double sum = 0.0;
  for (int s = j; s <= n; s += 3) {
    const double sign = s % 2 == 0 ? 1.0 : -1.0;
    sum += sign * ipow(y, n - s) * ipow(x, s) * (fact(n) / (fact(n - s) * fact(s) * fact(s)));
  }
  return sum;
}

double eta(int n, double x, double y, int j) {
  require_degree(n);
  require_cyclic_index(j);
  double sum = 0.0;
  for (int s = j; 2 * s <= n; s += 3) {
    sum += ipow(x, n - 2 * s) * ipow(y, s) * (fact(n) / (fact(n - 2 * s) * fact(s)));
  }
  return sum;
}

double g_component(int j, double x, double y, double tol) {
  require_cyclic_index(j);
  if (!(tol > 0.0)) throw InvalidArgument("g_component: tolerance must be positive");
  const double ax = std::fabs(x);
  const double ay = std::fabs(y);
  return grouped_series(
      3, j, tol, [&](int big_n) { return hermite2_scaled(big_n, x, y); },
      [&](int big_n) { return hermite2_scaled(big_n, ax, ay); }, "g_component");
}

double g_component_projection(int j, double x, double y) {
  require_cyclic_index(j);
  Complex sum{0.0, 0.0};
  for (int l = 0; l < 3; ++l) {
    sum += cyclic_unit(3, -j * l) * std::exp(cyclic_unit(3, l) * x + cyclic_unit(3, 2 * l) * y);
  }
  return sum.real() / 3.0;
}

double g0_closed_form(double x, double y) {
  const double s = x + y;
  const double c = 2.0 * std::exp(0.5 * s) * std::cos(kHalfSqrt3 * (x - y));
  return ((1.0 + c) * std::cosh(s) + (1.0 - c) * std::sinh(s)) / 3.0;
}

double hermite_multi(int n, std::span<const double> xs) {
  require_degree(n);
  if (xs.empty()) throw InvalidArgument("hermite_multi needs at least one variable");
  MultiHermite table(xs);
  return table.at(n, static_cast<int>(xs.size()));
}

Complex g_component_general(int m, int j, std::span<const double> xs, double tol) {
  if (m < 2) throw InvalidOrder("g_component_general: order must be >= 2");
  if (j < 0 || j >= m) throw InvalidOrder("g_component_general: component index out of range");
  if (xs.size() != static_cast<std::size_t>(m - 1)) {
    throw InvalidArgument("g_component_general: expected m - 1 variables");
  }
  if (!(tol > 0.0)) throw InvalidArgument("g_component_general: tolerance must be positive");
  std::vector<double> abs_xs(xs.begin(), xs.end());
  for (double& v : abs_xs) v = std::fabs(v);
  ScaledMultiHermite values(xs);
  ScaledMultiHermite envelope(abs_xs);
  const double sum = grouped_series(
      m, j, tol, [&](int big_n) { return values.get(big_n); },
      [&](int big_n) { return envelope.get(big_n); }, "g_component_general");
  return {sum, 0.0};
}

}  // namespace eisenfun
