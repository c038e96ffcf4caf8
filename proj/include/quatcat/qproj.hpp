#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "quatcat/hmatrix.hpp"
#include "quatcat/quaternion.hpp"

namespace quatcat {

/// Point of the quasi-projective subspace Q_n of the symplectic group:
/// the matrix phi(x, lambda) = x (lambda - 1) x* + I for a unit column x
/// and a unit quaternion lambda, together with one representative pair.
/// Representatives are only unique up to (x, lambda) ~ (x v, v^-1 lambda v);
/// the matrix is the canonical datum.
struct QPoint {
  HVector x;
  Quaternion lambda;
  HMatrix matrix;
};

/// Builds phi(x, lambda). Throws NotUnit unless |<x,x>| and |lambda| are
/// both within unit_eps of 1.
[[nodiscard]] QPoint phi(const HVector& x, const Quaternion& lambda, double unit_eps = 1e-12);

/// Decides membership of A in Q_n and reconstructs a representative.
/// ||A - I||_F <= tol yields the base point (e_1, 1). Otherwise the
/// largest-norm column of A - I serves as pivot: normalized it gives x,
/// lambda = <x, A x>, and A belongs to Q_n iff phi(x, lambda) reproduces A
/// within tol * (1 + ||A||_F). Returns nullopt when it does not.
[[nodiscard]] std::optional<QPoint> recover(const HMatrix& a, double tol = kMembershipTol);

/// Whether p and q name the same point: either both lambdas are within tol
/// of 1 (everything with lambda = 1 collapses to the base point) or the
/// matrices agree within tol in Frobenius norm. Throws SizeMismatch on
/// different ambient dimensions.
[[nodiscard]] bool equivalent(const QPoint& p, const QPoint& q, double tol = kMembershipTol);

/// Characteristic parametrization of the top cell: y in the closed unit
/// ball of H^{n-1} lifts to x = (y, sqrt(1 - |y|^2)); v in the closed unit
/// 3-ball maps to lambda = cos(pi |v|) + sin(pi |v|) v/|v|, so |v| = 1
/// collapses to lambda = -1 no matter the direction. Throws OutOfBall when
/// either argument leaves its ball and SizeMismatch unless y has n - 1
/// entries.
[[nodiscard]] QPoint char_map(std::size_t n, const HVector& y, const std::array<double, 3>& v);

/// Cell of the canonical decomposition, named by strictly decreasing
/// indices out of {1, .., n}; the empty tuple is the 0-cell.
struct NormalCell {
  std::vector<int> indices;

  /// sum over the indices of (4 i - 1).
  [[nodiscard]] int dimension() const;
};

/// All 2^n cells for Q_n, sorted by dimension, then lexicographically.
[[nodiscard]] std::vector<NormalCell> cells(int n);

/// Coefficient vector of the Poincare polynomial of Q_n, tallied from the
/// cell dimensions; index d holds the number of d-cells.
[[nodiscard]] std::vector<long long> poincare_polynomial(int n);

/// Deterministic random point of Q_n.
[[nodiscard]] QPoint sample_qn(std::size_t n, std::uint64_t seed);

/// Product of k random Q_n matrices; a deterministic symplectic sample that
/// generically leaves Q_n once k >= 2.
[[nodiscard]] HMatrix sample_sp_product(std::size_t n, int k, std::uint64_t seed);

}  // namespace quatcat
