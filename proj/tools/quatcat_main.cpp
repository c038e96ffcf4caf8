#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "quatcat/verify.hpp"
#include "quatcat/version.hpp"

namespace {

// Worker-count hint; 0 or unset means one worker per hardware thread.
int workers_from_env() {
  const char* raw = std::getenv("QUATCAT_THREADS");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 0) return 0;
  return static_cast<int>(v);
}

// Primary output goes to `path` when given, else to stdout; diagnostics
// stay on stderr so stdout remains machine-readable.
bool emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "quatcat: cannot open " << path << " for writing\n";
    return false;
  }
  f << text;
  return f.good();
}

}  // namespace

int main(int argc, char** argv) {
  using quatcat::CoverTag;

  CLI::App app{"numerical certificates for quasi-projective subspaces of Sp(n)"};
  app.set_version_flag("--version", std::string(quatcat::kVersion));
  app.require_subcommand(1);

  quatcat::SuiteConfig cfg;
  std::string out;

  CLI::App* verify = app.add_subcommand("verify", "run every suite and emit a JSON report");
  verify->add_option("--n", cfg.n, "ambient dimension")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  verify->add_option("--samples", cfg.samples, "samples per suite")->check(CLI::PositiveNumber);
  verify->add_option("--steps", cfg.time_steps, "points on each time grid")
      ->check(CLI::Range(2, 1 << 20));
  verify->add_option("--tol", cfg.tol, "membership tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "root seed");
  verify->add_option("--out", out, "write the report here instead of stdout");

  int cells_n = 3;
  bool cells_json = false;
  CLI::App* cells = app.add_subcommand("cells", "list the cell decomposition of Q_n");
  cells->add_option("--n", cells_n, "ambient dimension")->check(CLI::Range(1, 24));
  cells->add_flag("--json", cells_json, "emit JSON instead of text");
  cells->add_option("--out", out, "write the listing here instead of stdout");

  std::string set_name = "O1";
  CLI::App* path = app.add_subcommand("path", "trace one contraction as CSV");
  path->add_option("--n", cfg.n, "ambient dimension")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  path->add_option("--set", set_name, "cover set: O1, O2 or O3")
      ->check(CLI::IsMember({"O1", "O2", "O3"}));
  path->add_option("--steps", cfg.time_steps, "points on the time grid")
      ->check(CLI::Range(2, 1 << 20));
  path->add_option("--tol", cfg.tol, "membership tolerance")->check(CLI::PositiveNumber);
  path->add_option("--seed", cfg.seed, "root seed");
  path->add_option("--out", out, "write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.workers = workers_from_env();

  try {
    if (verify->parsed()) {
      cfg.out = out;
      const quatcat::Report report = quatcat::run_verify(cfg);
      std::cerr << quatcat::report_summary(report);
      if (!emit(quatcat::report_json(report), out)) return 2;
      return report.verdict_pass ? 0 : 1;
    }
    if (cells->parsed()) {
      return emit(quatcat::cells_listing(cells_n, cells_json), out) ? 0 : 2;
    }
    if (path->parsed()) {
      const CoverTag set = set_name == "O2"   ? CoverTag::O2
                           : set_name == "O3" ? CoverTag::O3
                                              : CoverTag::O1;
      const std::string csv =
          quatcat::path_trace_csv(cfg.n, set, cfg.time_steps, cfg.tol, cfg.seed);
      return emit(csv, out) ? 0 : 2;
    }
  } catch (const quatcat::Error& e) {
    std::cerr << "quatcat: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
