#pragma once

// Independent reference models for the tests. Everything here recomputes
// results from scratch in plain real arithmetic (or plain integer
// convolution) so that library bugs cannot cancel against themselves.
//
// The workhorse is the left-regular representation: a quaternion
// q = a + b i + c j + d k acts on column (w, x, y, z) through the real
// matrix
//
//        [ a -b -c -d ]
//   L_q = [ b  a -d  c ]
//        [ c  d  a -b ]
//        [ d -c  b  a ]
//
// with L_p L_q = L_{pq} and L_conj(q) = L_q^T. Block versions model
// quaternionic matrices and vectors, turning every algebraic law into a
// statement about real matrices.

#include <cstddef>
#include <vector>

#include "quatcat/hmatrix.hpp"
#include "quatcat/quaternion.hpp"

namespace oracle {

struct RealMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;

  RealMat() = default;
  RealMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static RealMat eye(std::size_t n) {
    RealMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline RealMat mul(const RealMat& x, const RealMat& y) {
  RealMat r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const double v = x(i, k);
      for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

inline RealMat add(const RealMat& x, const RealMat& y) {
  RealMat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

inline RealMat sub(const RealMat& x, const RealMat& y) {
  RealMat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

inline RealMat scale(const RealMat& x, double s) {
  RealMat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] * s;
  return r;
}

inline RealMat transpose(const RealMat& x) {
  RealMat r(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

inline double frob(const RealMat& x) {
  double s = 0.0;
  for (double v : x.a) s += v * v;
  return std::sqrt(s);
}

inline RealMat rep(const quatcat::Quaternion& q) {
  RealMat m(4, 4);
  const double a = q.w, b = q.x, c = q.y, d = q.z;
  m(0, 0) = a; m(0, 1) = -b; m(0, 2) = -c; m(0, 3) = -d;
  m(1, 0) = b; m(1, 1) = a;  m(1, 2) = -d; m(1, 3) = c;
  m(2, 0) = c; m(2, 1) = d;  m(2, 2) = a;  m(2, 3) = -b;
  m(3, 0) = d; m(3, 1) = -c; m(3, 2) = b;  m(3, 3) = a;
  return m;
}

/// Reads a quaternion back off the first column of a 4x4 block.
inline quatcat::Quaternion unrep(const RealMat& m) {
  return {m(0, 0), m(1, 0), m(2, 0), m(3, 0)};
}

inline RealMat rep(const quatcat::HMatrix& a) {
  const std::size_t n = a.dim();
  RealMat m(4 * n, 4 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RealMat b = rep(a(i, j));
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(4 * i + r, 4 * j + c) = b(r, c);
    }
  return m;
}

inline RealMat rep(const quatcat::HVector& v) {
  RealMat m(4 * v.size(), 4);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RealMat b = rep(v[i]);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(4 * i + r, c) = b(r, c);
  }
  return m;
}

/// Truncated power series sum_{k=0..terms} M^k / k!.
inline RealMat exp_series(const RealMat& m, int terms) {
  RealMat acc = RealMat::eye(m.rows);
  RealMat pow = RealMat::eye(m.rows);
  for (int k = 1; k <= terms; ++k) {
    pow = scale(mul(pow, m), 1.0 / k);
    acc = add(acc, pow);
  }
  return acc;
}

/// exp(q) through the real representation; no trigonometry involved.
inline quatcat::Quaternion exp_series(const quatcat::Quaternion& q, int terms = 60) {
  return unrep(exp_series(rep(q), terms));
}

/// Real model of the quaternionic rank-one matrix x mu x*: block (i, j) is
/// L_{x_i} L_mu L_{x_j}^T, never touching the library's Hamilton product.
inline RealMat rank_one_rep(const quatcat::HVector& x, const quatcat::Quaternion& mu) {
  const std::size_t n = x.size();
  const RealMat lmu = rep(mu);
  RealMat m(4 * n, 4 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RealMat b = mul(mul(rep(x[i]), lmu), transpose(rep(x[j])));
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(4 * i + r, 4 * j + c) = b(r, c);
    }
  return m;
}

/// Coefficients of the product over i = 1..n of (1 + t^(4i-1)), by plain
/// convolution.
inline std::vector<long long> poincare_product(int n) {
  std::vector<long long> p{1};
  for (int i = 1; i <= n; ++i) {
    const std::size_t d = static_cast<std::size_t>(4 * i - 1);
    std::vector<long long> q(p.size() + d, 0);
    for (std::size_t a = 0; a < p.size(); ++a) {
      q[a] += p[a];
      q[a + d] += p[a];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace oracle
