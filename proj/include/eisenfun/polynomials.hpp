#pragma once

// Polynomial families generated by the Eisenstein decomposition.
//
// Each family is evaluated by its finite factorial-ratio sum with factorials
// held as doubles (exact up to 22!, correctly rounded products beyond).
// Degrees above kMaxPolynomialDegree throw RangeError.

#include <span>
#include <vector>

#include "eisenfun/core_algebra.hpp"
#include "eisenfun/phf.hpp"

namespace eisenfun {

inline constexpr int kMaxPolynomialDegree = 120;

/// n! as a double, 0 <= n <= 170.
double factorial_value(int n);

/// Two-variable Hermite H_n(x, y) = n! sum_r x^{n-2r} y^r / ((n-2r)! r!),
/// generated by exp(x t + y t^2).
double hermite2(int n, double x, double y);
Complex hermite2(int n, Complex x, Complex y);

/// Pseudo-Hermite h_n^{(3)}(x, y; j): the omega^j part of (x + omega y)^n.
double pseudo_hermite3(int n, double x, double y, int j);

/// Two-variable Laguerre L_n(x, y) = n! sum_r (-1)^r y^{n-r} x^r / ((n-r)! (r!)^2).
double laguerre2(int n, double x, double y);

/// Hybrid Laguerre l_n^{(3)}(y, x; j): the omega^j part of (y - omega D_x^{-1})^n
/// acting on 1. Argument order is (y, x), matching the pseudo-Hermite slot
/// that D_x^{-1} replaces.
double hybrid_laguerre3(int n, double y, double x, int j);

/// eta_n(x, y; j): the omega^j part of H_n(x, omega y).
double eta(int n, double x, double y, int j);

/// g_j(x, y) = sum_n H_{3n+j}(x, y) / (3n+j)!, the omega^j part of
/// exp(omega x + omega^2 y). Same stopping rule as phf_series.
double g_component(int j, double x, double y, double tol = kDefaultSeriesTol);

/// g_j by projection: (1/3) sum_l omega^{-jl} exp(omega^l x + omega^{2l} y).
double g_component_projection(int j, double x, double y);

/// g_0 as the cosh/sinh closed form.
double g0_closed_form(double x, double y);

/// Higher-order Hermite H_n^{(p)}(x_1..x_p) generated by exp(sum_l x_l t^l),
/// via the recursion on p with base H_n^{(1)}(x) = x^n. Memoized per call.
double hermite_multi(int n, std::span<const double> xs);

/// Order-m generalization of g_j: sum_n H_{mn+j}^{(m-1)}(xs) / (mn+j)! with
/// xs.size() == m - 1. Satisfies exp(sum_l w^l x_l) = sum_j w^j g_j.
Complex g_component_general(int m, int j, std::span<const double> xs,
                            double tol = kDefaultSeriesTol);

}  // namespace eisenfun
