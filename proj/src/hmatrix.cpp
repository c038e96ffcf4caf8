#include "quatcat/hmatrix.hpp"

#include <cmath>
#include <string>

namespace quatcat {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw SizeMismatch(std::string(what) + ": sizes " + std::to_string(a) + " and " +
                       std::to_string(b));
}

}  // namespace

HVector HVector::basis(std::size_t n, std::size_t k) {
  HVector v(n);
  v[k] = kQOne;
  return v;
}

Quaternion dot(const HVector& x, const HVector& y) {
  require_same_size(x.size(), y.size(), "dot");
  Quaternion s;
  for (std::size_t i = 0; i < x.size(); ++i) s += conj(x[i]) * y[i];
  return s;
}

double norm(const HVector& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += norm_sq(x[i]);
  return std::sqrt(s);
}

HVector operator+(const HVector& x, const HVector& y) {
  require_same_size(x.size(), y.size(), "vector sum");
  HVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

HVector operator-(const HVector& x, const HVector& y) {
  require_same_size(x.size(), y.size(), "vector difference");
  HVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

HVector operator*(const HVector& x, const Quaternion& a) {
  HVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * a;
  return r;
}

HMatrix HMatrix::identity(std::size_t n) {
  HMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kQOne;
  return m;
}

HMatrix operator+(const HMatrix& a, const HMatrix& b) {
  require_same_size(a.dim(), b.dim(), "matrix sum");
  HMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

HMatrix operator-(const HMatrix& a, const HMatrix& b) {
  require_same_size(a.dim(), b.dim(), "matrix difference");
  HMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

HMatrix operator*(const HMatrix& a, const HMatrix& b) {
  require_same_size(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  HMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Quaternion& aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

HMatrix operator*(const HMatrix& a, double s) {
  HMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) * s;
  return r;
}

HMatrix operator*(double s, const HMatrix& a) { return a * s; }

HMatrix adjoint(const HMatrix& a) {
  HMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = conj(a(j, i));
  return r;
}

HVector apply(const HMatrix& a, const HVector& v) {
  require_same_size(a.dim(), v.size(), "matrix-vector product");
  HVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Quaternion s;
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double fro_norm(const HMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += norm_sq(a(i, j));
  return std::sqrt(s);
}

double symplectic_residual(const HMatrix& a) {
  return fro_norm(adjoint(a) * a - HMatrix::identity(a.dim()));
}

HMatrix embed(const HMatrix& a) {
  HMatrix r(a.dim() + 1);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j);
  r(a.dim(), a.dim()) = kQOne;
  return r;
}

HMatrix rank_one(const HVector& x, const Quaternion& q) {
  const std::size_t n = x.size();
  HMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Quaternion xi_q = x[i] * q;
    for (std::size_t j = 0; j < n; ++j) r(i, j) = xi_q * conj(x[j]);
  }
  return r;
}

}  // namespace quatcat
