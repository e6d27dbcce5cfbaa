#pragma once

// Truncated Fock-space checks for the factored oscillator Hamiltonian and
// the mod-3 components of the omega-rotated coherent state.
//
// Basis |0> .. |N-1>. Truncation corrupts only the last rows/columns of
// products of ladder operators, so identities are compared on leading blocks.

#include <cstddef>
#include <vector>

#include "eisenfun/core_algebra.hpp"

namespace eisenfun {

inline constexpr std::size_t kMaxFockDim = 256;

class OperatorMatrix {
 public:
  explicit OperatorMatrix(std::size_t dim);

  static OperatorMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  const std::vector<Complex>& data() const noexcept { return data_; }

  OperatorMatrix adjoint() const;

  OperatorMatrix& operator+=(const OperatorMatrix& rhs);
  OperatorMatrix& operator-=(const OperatorMatrix& rhs);
  OperatorMatrix& operator*=(Complex scale);

  friend OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs += rhs; }
  friend OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs -= rhs; }
  friend OperatorMatrix operator*(Complex s, OperatorMatrix m) { return m *= s; }
  friend OperatorMatrix operator*(OperatorMatrix m, Complex s) { return m *= s; }
  // Matrix product through the dispatched SIMD kernel.
  friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// max |a(i,j) - b(i,j)| over the leading block x block corner.
double block_max_deviation(const OperatorMatrix& a, const OperatorMatrix& b, std::size_t block);

/// Infinity norm of a - a^dagger over the full matrix.
double hermiticity_defect(const OperatorMatrix& a);

struct FockState {
  std::vector<Complex> amplitudes;

  std::size_t dim() const noexcept { return amplitudes.size(); }
  double norm_squared() const;
  double norm() const;
};

FockState apply(const OperatorMatrix& op, const FockState& state);

struct LadderPair {
  OperatorMatrix annihilation;
  OperatorMatrix creation;
};

struct QuadraturePair {
  OperatorMatrix q;
  OperatorMatrix p;
};

struct FactoredPair {
  OperatorMatrix a;      // (q + omega p) / sqrt2
  OperatorMatrix a_c;    // (q + omega^2 p) / sqrt2
};

struct HamiltonianForms {
  OperatorMatrix quadratic;  // p^2/2 - (pq + qp)/4 + q^2/2
  OperatorMatrix factored;   // A A_c + (i/4)(2 omega + 1)
};

/// a|n> = sqrt(n)|n-1>; N in [4, 256].
LadderPair ladder(std::size_t dim);

/// q = (a + a^dag)/sqrt2, p = (a - a^dag)/(i sqrt2), so [p, q] = -i.
QuadraturePair quadratures(std::size_t dim);

FactoredPair factored_operators(std::size_t dim);

/// (i/4)(2 omega + 1) = -sqrt3/4.
Complex hamiltonian_shift();

/// -(i/2)(2 omega + 1) = sqrt3/2, the value of [A, A_c].
Complex factored_commutator_value();

/// N >= 6. The two forms agree on the leading (N-2) block.
HamiltonianForms hamiltonian_forms(std::size_t dim);

/// max deviation of [A, A_c] from (sqrt3/2) I on the leading (N-2) block.
double a_commutator_check(std::size_t dim);

/// Amplitudes alpha^{3n+j}/sqrt((3n+j)!) on |3n+j>, zero elsewhere.
/// j in {0,1,2}, N in [12, 256], |alpha| <= 2.
FockState coherent_component(Complex alpha, int j, std::size_t dim);

/// ||a^3 v - alpha^3 v|| / ||v|| for v = coherent_component(alpha, j, N), with
/// the top 3 amplitudes dropped. Returns 0 for the zero state.
double cubic_eigencheck(Complex alpha, int j, std::size_t dim);

/// Same check with a^j and alpha^j. Holds only for j = 0 or alpha = 0.
double power_j_eigencheck(Complex alpha, int j, std::size_t dim);

}  // namespace eisenfun
