#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quatcat/cover.hpp"

namespace quatcat {

/// Knobs of a verification run. Everything except `out` and `workers`
/// shapes the result; those two only steer where it goes and how fast it
/// is computed.
struct SuiteConfig {
  std::size_t n = 3;
  int samples = 100;
  int time_steps = 64;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::string out;      // report file; empty = stdout
  int workers = 1;      // 0 = one per hardware thread
};

/// One suite line of the report. `expectation` is "pass" when the suite
/// must come out clean and "witness" when it is expected to record a
/// point that left Q_n.
struct SuiteResult {
  std::string name;
  std::string expectation = "pass";
  int samples = 0;
  int failures = 0;
  double max_endpoint_residual = 0.0;
  double max_symplectic_residual = 0.0;
  std::optional<QnWitness> witness;
  std::optional<double> representative_discrepancy;

  [[nodiscard]] bool passed() const {
    return failures == 0 && (expectation == "witness") == witness.has_value();
  }
};

struct Report {
  SuiteConfig config;
  std::vector<SuiteResult> suites;
  bool verdict_pass = false;
  std::string version;
};

/// Runs every suite. Throws DomainError on nonsensical configs.
[[nodiscard]] Report run_verify(const SuiteConfig& cfg);

/// Serializes a report with a stable key order; identical reports produce
/// identical bytes.
[[nodiscard]] std::string report_json(const Report& report);

/// One line per suite plus the verdict, for humans.
[[nodiscard]] std::string report_summary(const Report& report);

/// Cell table of Q_n, as text or JSON.
[[nodiscard]] std::string cells_listing(int n, bool json);

/// CSV trace (columns t, sympl_residual, dist_to_I, in_qn) of the
/// contraction of one sampled point of the given cover set.
[[nodiscard]] std::string path_trace_csv(std::size_t n, CoverTag set, int time_steps, double tol,
                                         std::uint64_t seed);

}  // namespace quatcat
