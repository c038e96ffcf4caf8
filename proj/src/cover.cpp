#include "quatcat/cover.hpp"

#include <algorithm>
#include <cmath>

#include "quatcat/parallel.hpp"
#include "quatcat/rng.hpp"

namespace quatcat {

namespace {

// Seed streams, one per cover set, so the three batches never share draws.
constexpr std::uint64_t stream_of(CoverTag tag) {
  switch (tag) {
    case CoverTag::O1: return 0;
    case CoverTag::O2: return 1;
    case CoverTag::O3: return 2;
  }
  return 0;
}

QPoint draw_point(std::size_t n, CoverTag tag, rng::Engine& eng) {
  const HVector x = rng::unit_vector(n, eng);
  switch (tag) {
    case CoverTag::O1: {
      Quaternion lambda = rng::unit_quaternion(eng);
      while (norm(lambda - kQOne) <= kClassEps || norm(lambda + kQOne) <= kClassEps)
        lambda = rng::unit_quaternion(eng);
      return phi(x, lambda);
    }
    case CoverTag::O2:
      return phi(x, -kQOne);
    case CoverTag::O3: {
      const Quaternion omega = rng::unit_imaginary(eng);
      return phi(x, qexp(omega * (0.5 * kClassEps)));
    }
  }
  throw DomainError("draw_point: bad tag");
}

struct SampleStats {
  double endpoint = 0.0;
  double symplectic = 0.0;
  int first_left_step = -1;
  double discrepancy = 0.0;
};

SampleStats eval_sample(const QPoint& p, CoverTag tag, int time_steps, double tol,
                        rng::Engine& eng) {
  SampleStats st;
  const std::size_t n = p.x.size();
  const HMatrix id = HMatrix::identity(n);

  // Same matrix through a second representative; only O2 reports this.
  std::optional<QPoint> alt;
  if (tag == CoverTag::O2) {
    const Quaternion nu = rng::unit_quaternion(eng);
    alt = phi(p.x * nu, -kQOne);
  }

  for (int k = 0; k < time_steps; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(time_steps - 1);
    const HMatrix m =
        tag == CoverTag::O2 ? contract_O2(p, t) : contract_O1(p, t).matrix;
    if (k == 0) st.endpoint = std::max(st.endpoint, fro_norm(m - p.matrix));
    if (k == time_steps - 1) st.endpoint = std::max(st.endpoint, fro_norm(m - id));
    st.symplectic = std::max(st.symplectic, symplectic_residual(m));
    if (st.first_left_step < 0 && !recover(m, tol)) st.first_left_step = k;
    if (alt) st.discrepancy = std::max(st.discrepancy, fro_norm(m - contract_O2(*alt, t)));
  }
  return st;
}

}  // namespace

const char* to_string(CoverTag tag) {
  switch (tag) {
    case CoverTag::O1: return "O1";
    case CoverTag::O2: return "O2";
    case CoverTag::O3: return "O3";
  }
  return "?";
}

CoverTag classify(const QPoint& p, double class_eps) {
  if (norm(p.lambda + kQOne) <= class_eps) return CoverTag::O2;
  if (norm(p.lambda - kQOne) <= class_eps) return CoverTag::O3;
  return CoverTag::O1;
}

HMatrix log_matrix(const QPoint& p) {
  Quaternion mu;
  try {
    mu = qlog(p.lambda);
  } catch (const NegativeRealAxis&) {
    throw BranchViolation("log_matrix: lambda sits on the branch cut");
  }
  return rank_one(p.x, mu);
}

HMatrix exp_rank_one(const HVector& x, const Quaternion& mu) {
  return rank_one(x, qexp(mu) - kQOne) + HMatrix::identity(x.size());
}

QPoint contract_O1(const QPoint& p, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("contract_O1: t outside [0, 1]");
  Quaternion mu;
  try {
    mu = qlog(p.lambda);
  } catch (const NegativeRealAxis&) {
    throw BranchViolation("contract_O1: lambda sits on the branch cut");
  }
  return phi(p.x, qexp(mu * (1.0 - t)));
}

HMatrix contract_O2(const QPoint& p, double t, double class_eps) {
  if (classify(p, class_eps) != CoverTag::O2)
    throw DomainError("contract_O2: point is not in O2");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("contract_O2: t outside [0, 1]");
  const Quaternion log_i = qlog(kQI);  // (pi/2) i
  if (t <= 0.5) {
    const Quaternion lambda = qexp(log_i * (1.0 - 2.0 * t));
    return phi(p.x, lambda).matrix * phi(p.x, kQI).matrix;
  }
  return phi(p.x, qexp(log_i * (2.0 * (1.0 - t)))).matrix;
}

QPoint sample_cover_point(std::size_t n, CoverTag set, std::uint64_t seed) {
  rng::Engine eng = rng::engine(seed);
  return draw_point(n, set, eng);
}

std::vector<HomotopyCertificate> verify_cover(std::size_t n, int samples, int time_steps,
                                              double tol, std::uint64_t seed, int workers) {
  if (n < 1) throw DomainError("verify_cover: n must be at least 1");
  if (samples < 1) throw DomainError("verify_cover: samples must be at least 1");
  if (time_steps < 2) throw DomainError("verify_cover: need at least 2 time steps");
  if (!(tol > 0.0)) throw DomainError("verify_cover: tol must be positive");

  std::vector<HomotopyCertificate> out;
  for (const CoverTag tag : {CoverTag::O1, CoverTag::O2, CoverTag::O3}) {
    std::vector<SampleStats> stats(static_cast<std::size_t>(samples));
    parallel_for_indices(stats.size(), workers, [&](std::size_t i) {
      rng::Engine eng = rng::engine(rng::derive(seed, stream_of(tag), i));
      const QPoint p = (tag == CoverTag::O3 && i == 0)
                           ? phi(HVector::basis(n, 0), kQOne)
                           : draw_point(n, tag, eng);
      stats[i] = eval_sample(p, tag, time_steps, tol, eng);
    });

    HomotopyCertificate cert;
    cert.n = n;
    cert.set = tag;
    cert.samples = samples;
    cert.time_steps = time_steps;
    cert.seed = seed;
    double disc = 0.0;
    for (std::size_t i = 0; i < stats.size(); ++i) {
      cert.max_endpoint_residual = std::max(cert.max_endpoint_residual, stats[i].endpoint);
      cert.max_symplectic_residual = std::max(cert.max_symplectic_residual, stats[i].symplectic);
      disc = std::max(disc, stats[i].discrepancy);
      if (stats[i].first_left_step >= 0 && !cert.left_qn_witness) {
        cert.stays_in_qn = false;
        cert.left_qn_witness =
            QnWitness{static_cast<int>(i), static_cast<double>(stats[i].first_left_step) /
                                               static_cast<double>(time_steps - 1)};
      }
    }
    if (tag == CoverTag::O2) cert.representative_discrepancy = disc;
    out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace quatcat
