#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quatcat/qproj.hpp"

namespace quatcat {

// Three subsets cover Q_n, split by the recovered scalar lambda:
//   O1  lambda away from both 1 and -1; the principal logarithm of lambda
//       is defined and contract_O1 slides it linearly to 0.
//   O2  lambda = -1, the branch locus; contract_O2 routes around the cut
//       through phi(x, i) instead.
//   O3  lambda = 1, i.e. the base point; contract_O1 applies and is
//       (nearly) constant.
enum class CoverTag { O1, O2, O3 };

[[nodiscard]] const char* to_string(CoverTag tag);

inline constexpr double kClassEps = 1e-12;

/// Tags p by its stored lambda: within class_eps of -1 is O2, within
/// class_eps of 1 is O3, everything else O1.
[[nodiscard]] CoverTag classify(const QPoint& p, double class_eps = kClassEps);

/// x (log lambda) x*, the skew-adjoint tangent direction whose rank-one
/// exponential is p.matrix. Throws BranchViolation on O2 points.
[[nodiscard]] HMatrix log_matrix(const QPoint& p);

/// exp(x mu x*) collapsed in closed form: the power series telescopes to
/// I + x (exp(mu) - 1) x* because (x mu x*)^k = x mu^k x* for unit x.
[[nodiscard]] HMatrix exp_rank_one(const HVector& x, const Quaternion& mu);

/// Contraction of O1 (and O3): t maps p to phi(x, exp((1 - t) log lambda)),
/// so t = 0 is p and t = 1 is the identity. Throws BranchViolation when
/// log lambda does not exist (O2) and DomainError for t outside [0, 1].
[[nodiscard]] QPoint contract_O1(const QPoint& p, double t);

/// Contraction of O2. The path first wins phi(x, i) as a factor, using
/// phi(x, a) phi(x, b) = phi(x, ab):
///   t <= 1/2:  phi(x, exp((1 - 2t) log i)) * phi(x, i)
///   t >= 1/2:  phi(x, exp(2 (1 - t) log i))
/// Both halves give phi(x, i) at t = 1/2; t = 0 is phi(x, -1), t = 1 is I.
/// The matrix value does not depend on the representative x, but the
/// formula is evaluated through it. Throws DomainError off O2 or for t
/// outside [0, 1].
[[nodiscard]] HMatrix contract_O2(const QPoint& p, double t, double class_eps = kClassEps);

/// Grid point at which a contraction path first left Q_n.
struct QnWitness {
  int sample = 0;
  double t = 0.0;
};

/// Measured outcome of contracting every sampled point of one cover set on
/// a uniform time grid.
struct HomotopyCertificate {
  std::size_t n = 0;
  CoverTag set = CoverTag::O1;
  int samples = 0;
  int time_steps = 0;
  // max over samples of ||path(0) - p.matrix||_F and ||path(1) - I||_F
  double max_endpoint_residual = 0.0;
  // max over samples and grid times of symplectic_residual(path(t))
  double max_symplectic_residual = 0.0;
  // whether recover() accepted every grid point of every sample
  bool stays_in_qn = true;
  std::optional<QnWitness> left_qn_witness;
  std::uint64_t seed = 0;
  // O2 only: max Frobenius distance between the paths of two
  // representatives x and x*nu of the same matrix, nu a random unit
  // quaternion. Reported, not bounded.
  std::optional<double> representative_discrepancy;
};

/// Sampled point of the requested cover set: O1 draws (x, lambda) with
/// lambda clear of both poles, O2 uses lambda = -1, O3 uses
/// lambda = exp(eps * omega) with |eps| well under kClassEps.
[[nodiscard]] QPoint sample_cover_point(std::size_t n, CoverTag set, std::uint64_t seed);

/// Contracts `samples` random points of each of the three sets on a
/// `time_steps`-point grid and certifies the outcome. Membership along the
/// paths is decided by recover(., tol). The result is a deterministic
/// function of (n, samples, time_steps, tol, seed) for any worker count.
/// The O3 batch always includes the identity matrix itself as sample 0.
[[nodiscard]] std::vector<HomotopyCertificate> verify_cover(std::size_t n, int samples,
                                                            int time_steps, double tol,
                                                            std::uint64_t seed, int workers = 1);

}  // namespace quatcat
