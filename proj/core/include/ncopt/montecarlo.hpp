#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ncopt/instance.hpp"
#include "ncopt/oma.hpp"
#include "ncopt/solver.hpp"

namespace ncopt {

enum class TrialMode {
  NominalGains,  // evaluate at the average gains
  SampledGains,  // draw a fresh gain realization per trial
};

struct TrialConfig {
  std::size_t n_trials = 1;
  std::uint64_t master_seed = 0;
  TrialMode mode = TrialMode::NominalGains;
  // Re-sort a sampled realization into non-increasing order before
  // solving (per-realization decoding order instead of the average one).
  bool resort_sampled = false;
};

// Closed form vs empirical outage for one user, with binomial
// significance bookkeeping. sigma is sqrt(p (1 - p) / n) at the
// closed-form p.
struct OutageValidation {
  std::size_t user = 0;
  double closed_form = 1.0;
  double estimate = 1.0;
  double sigma = 0.0;
  bool within_3sigma = false;
  bool valid_regime = false;  // rho_m > theta * rho_u
};

// One row per user; trial streams are sub-seeded per user, so rows are
// independent of evaluation order.
std::vector<OutageValidation> run_outage_validation(const ProblemInstance& instance,
                                                    const PowerSplit& split,
                                                    const TrialConfig& config);

struct RminSweepRow {
  double r_min = 0.0;
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<InfeasibleKind> infeasible_kind;
  double noma_objective = 0.0;      // valid when status != Infeasible
  bool oma_feasible = false;
  double oma_sum_rate = 0.0;        // valid when oma_feasible
  double backhaul_load_noma = 0.0;  // miss mass x objective
  double backhaul_load_oma = 0.0;
};

struct ZipfSweepRow {
  double zeta = 0.0;
  double cache_size = 0.0;
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<InfeasibleKind> infeasible_kind;
  double noma_objective = 0.0;
  bool oma_feasible = false;
  double oma_sum_rate = 0.0;
  double backhaul_load_noma = 0.0;
  double backhaul_load_oma = 0.0;
};

// Solves one instance per grid point; infeasible points produce a row
// with their status instead of being dropped. Rows are keyed by grid
// index, so worker count never changes the output.
std::vector<RminSweepRow> sweep_rmin(const ProblemInstance& base,
                                     std::span<const double> r_min_grid,
                                     const SolverOptions& options,
                                     bool with_oma, unsigned threads);

std::vector<ZipfSweepRow> sweep_zipf(const ProblemInstance& base,
                                     std::span<const double> zeta_grid,
                                     std::span<const double> cache_sizes,
                                     const SolverOptions& options,
                                     bool with_oma, unsigned threads);

struct TrialOutcome {
  std::size_t trial = 0;
  SolveStatus status = SolveStatus::Infeasible;
  double objective = 0.0;
  double rho_u_star = 0.0;
};

// Per-trial solves: NominalGains repeats the deterministic instance,
// SampledGains solves against a fresh realization per trial (sub-seeded
// by trial index).
std::vector<TrialOutcome> run_solve_trials(const ProblemInstance& instance,
                                           const TrialConfig& config,
                                           const SolverOptions& options = {});

// Worker-count resolution used by the CLI: the NOMA_CACHE_OPT_THREADS
// environment variable caps the hardware concurrency when set to a
// positive integer.
unsigned resolve_thread_count();

}  // namespace ncopt
