#include "eisenfun/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eisenfun/error.hpp"
#include "eisenfun/kernels.hpp"

namespace eisenfun {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_dim(std::size_t dim, std::size_t minimum) {
  if (dim < minimum || dim > kMaxFockDim) {
    throw DimensionError("Fock dimension " + std::to_string(dim) + " outside [" +
                         std::to_string(minimum) + ", " + std::to_string(kMaxFockDim) + "]");
  }
}

void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("operator dimensions differ");
}

void require_coherent(Complex alpha, int j, std::size_t dim) {
  require_dim(dim, 12);
  if (j < 0 || j > 2) throw RangeError("coherent component index must be 0, 1 or 2");
  if (!(std::abs(alpha) <= 2.0)) throw RangeError("|alpha| must not exceed 2");
}

Complex int_power(Complex base, int e) {
  Complex result{1.0, 0.0};
  for (int i = 0; i < e; ++i) result *= base;
  return result;
}

// ||a^power v - alpha^power v|| / ||v|| on the truncated space, ignoring the
// top `power` entries that truncation leaves without upstream contributions.
double eigen_residual(Complex alpha, int j, std::size_t dim, int power) {
  const FockState v = coherent_component(alpha, j, dim);
  const double norm = v.norm();
  if (norm == 0.0) return 0.0;
  const OperatorMatrix a = ladder(dim).annihilation;
  FockState lowered = v;
  for (int i = 0; i < power; ++i) lowered = apply(a, lowered);
  const Complex scale = int_power(alpha, power);
  double sum = 0.0;
  for (std::size_t n = 0; n + static_cast<std::size_t>(power) < dim; ++n) {
    sum += std::norm(lowered.amplitudes[n] - scale * v.amplitudes[n]);
  }
  return std::sqrt(sum) / norm;
}

}  // namespace

OperatorMatrix::OperatorMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
  OperatorMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_dim(lhs, rhs);
  OperatorMatrix out(lhs.dim());
  kernels::complex_matmul(kernels::active_isa(), lhs.dim(), lhs.data_, rhs.data_, out.data_);
  return out;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

double block_max_deviation(const OperatorMatrix& a, const OperatorMatrix& b, std::size_t block) {
  require_same_dim(a, b);
  block = std::min(block, a.dim());
  double worst = 0.0;
  for (std::size_t i = 0; i < block; ++i) {
    for (std::size_t j = 0; j < block; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  }
  return worst;
}

double hermiticity_defect(const OperatorMatrix& a) {
  return block_max_deviation(a, a.adjoint(), a.dim());
}

double FockState::norm_squared() const {
  double sum = 0.0;
  for (const auto& c : amplitudes) sum += std::norm(c);
  return sum;
}

double FockState::norm() const { return std::sqrt(norm_squared()); }

FockState apply(const OperatorMatrix& op, const FockState& state) {
  if (op.dim() != state.dim()) throw DimensionError("operator and state dimensions differ");
  FockState out{std::vector<Complex>(state.dim())};
  for (std::size_t i = 0; i < op.dim(); ++i) {
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < op.dim(); ++j) sum += op(i, j) * state.amplitudes[j];
    out.amplitudes[i] = sum;
  }
  return out;
}

LadderPair ladder(std::size_t dim) {
  require_dim(dim, 4);
  OperatorMatrix a(dim);
  for (std::size_t n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  OperatorMatrix a_dag = a.adjoint();
  return {std::move(a), std::move(a_dag)};
}

QuadraturePair quadratures(std::size_t dim) {
  const auto [a, a_dag] = ladder(dim);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  OperatorMatrix q = (a + a_dag) * Complex{inv_sqrt2, 0.0};
  OperatorMatrix p = (a - a_dag) * (Complex{inv_sqrt2, 0.0} / kI);
  return {std::move(q), std::move(p)};
}

FactoredPair factored_operators(std::size_t dim) {
  const auto [q, p] = quadratures(dim);
  const Complex inv_sqrt2{1.0 / std::numbers::sqrt2, 0.0};
  return {(q + kOmega * p) * inv_sqrt2, (q + kOmega2 * p) * inv_sqrt2};
}

Complex hamiltonian_shift() { return (kI / 4.0) * (2.0 * kOmega + 1.0); }

Complex factored_commutator_value() { return -(kI / 2.0) * (2.0 * kOmega + 1.0); }

HamiltonianForms hamiltonian_forms(std::size_t dim) {
  require_dim(dim, 6);
  const auto [q, p] = quadratures(dim);
  OperatorMatrix quadratic = p * p * Complex{0.5, 0.0} - (p * q + q * p) * Complex{0.25, 0.0} +
                             q * q * Complex{0.5, 0.0};
  const auto [a, a_c] = factored_operators(dim);
  OperatorMatrix factored = a * a_c + OperatorMatrix::identity(dim) * hamiltonian_shift();
  return {std::move(quadratic), std::move(factored)};
}

double a_commutator_check(std::size_t dim) {
  require_dim(dim, 6);
  const auto [a, a_c] = factored_operators(dim);
  const OperatorMatrix expected = OperatorMatrix::identity(dim) * factored_commutator_value();
  return block_max_deviation(commutator(a, a_c), expected, dim - 2);
}

FockState coherent_component(Complex alpha, int j, std::size_t dim) {
  require_coherent(alpha, j, dim);
  FockState state{std::vector<Complex>(dim)};
  // alpha^n / sqrt(n!) by the running product; n! leaves double range past 170.
  Complex amplitude{1.0, 0.0};
  for (std::size_t n = 0; n < dim; ++n) {
    if (n > 0) amplitude *= alpha / std::sqrt(static_cast<double>(n));
    if (n % 3 == static_cast<std::size_t>(j)) state.amplitudes[n] = amplitude;
  }
  return state;
}

double cubic_eigencheck(Complex alpha, int j, std::size_t dim) {
  return eigen_residual(alpha, j, dim, 3);
}

double power_j_eigencheck(Complex alpha, int j, std::size_t dim) {
  return eigen_residual(alpha, j, dim, j);
}

}  // namespace eisenfun
