#pragma once

#include <cstddef>
#include <vector>

#include "quatcat/errors.hpp"
#include "quatcat/quaternion.hpp"

namespace quatcat {

// Default tolerance for membership-style checks built on these primitives.
inline constexpr double kMembershipTol = 1e-9;

/// Column vector over the quaternions. Scalars act on the right, so
/// (v * a) * b == v * (a * b); matrices act from the left and commute with
/// that action.
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::size_t n) : e_(n) {}
  explicit HVector(std::vector<Quaternion> entries) : e_(std::move(entries)) {}

  /// k-th standard basis vector of length n.
  static HVector basis(std::size_t n, std::size_t k);

  [[nodiscard]] std::size_t size() const { return e_.size(); }
  [[nodiscard]] Quaternion& operator[](std::size_t i) { return e_[i]; }
  [[nodiscard]] const Quaternion& operator[](std::size_t i) const { return e_[i]; }

 private:
  std::vector<Quaternion> e_;
};

/// sum_i conj(x_i) * y_i. Conjugate-linear in x, linear in y:
/// dot(x * a, y * b) == conj(a) * dot(x, y) * b.
[[nodiscard]] Quaternion dot(const HVector& x, const HVector& y);

[[nodiscard]] double norm(const HVector& x);

[[nodiscard]] HVector operator+(const HVector& x, const HVector& y);
[[nodiscard]] HVector operator-(const HVector& x, const HVector& y);

/// Right scalar action.
[[nodiscard]] HVector operator*(const HVector& x, const Quaternion& a);

/// Dense square matrix over the quaternions, row-major.
class HMatrix {
 public:
  HMatrix() = default;
  explicit HMatrix(std::size_t n) : n_(n), e_(n * n) {}

  static HMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] Quaternion& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  [[nodiscard]] const Quaternion& operator()(std::size_t i, std::size_t j) const {
    return e_[i * n_ + j];
  }

 private:
  std::size_t n_ = 0;
  std::vector<Quaternion> e_;
};

[[nodiscard]] HMatrix operator+(const HMatrix& a, const HMatrix& b);
[[nodiscard]] HMatrix operator-(const HMatrix& a, const HMatrix& b);
[[nodiscard]] HMatrix operator*(const HMatrix& a, const HMatrix& b);
[[nodiscard]] HMatrix operator*(const HMatrix& a, double s);
[[nodiscard]] HMatrix operator*(double s, const HMatrix& a);

/// Conjugate transpose.
[[nodiscard]] HMatrix adjoint(const HMatrix& a);

/// Matrix times column vector.
[[nodiscard]] HVector apply(const HMatrix& a, const HVector& v);

[[nodiscard]] double fro_norm(const HMatrix& a);

/// || adjoint(A) * A - I ||_F; zero exactly on the symplectic group.
[[nodiscard]] double symplectic_residual(const HMatrix& a);

/// Corner embedding of an n x n matrix into (n+1) x (n+1): block diag(A, 1).
[[nodiscard]] HMatrix embed(const HMatrix& a);

/// Matrix with entries x_i * q * conj(x_j). For unit x its Frobenius norm
/// is |q| and left/right multiplication by x behaves like the scalar q.
[[nodiscard]] HMatrix rank_one(const HVector& x, const Quaternion& q);

}  // namespace quatcat
