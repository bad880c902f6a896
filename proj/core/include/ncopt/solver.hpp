#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncopt/errors.hpp"
#include "ncopt/instance.hpp"
#include "ncopt/power_alloc.hpp"

namespace ncopt {

struct SolverOptions {
  double tol = 1e-6;          // objective-change stopping tolerance
  std::size_t max_iter = 100;
};

enum class SolveStatus { Converged, MaxIterations, Infeasible };

const char* to_string(SolveStatus status) noexcept;

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<InfeasibleKind> infeasible_kind;
  std::string message;

  double objective = 0.0;      // K * r_min + delta_r of the strongest user
  double rho_u_star = 0.0;
  MinPowerProfile min_profile;
  CachePolicy policy;
  std::vector<double> trace;   // objective after each iteration, non-decreasing

  bool ok() const noexcept { return status != SolveStatus::Infeasible; }
};

// Power subproblem for a fixed cache policy. The objective is strictly
// increasing in rho_u, so the optimum is the tightest of three caps:
// the outage bound, the backhaul inversion
//   rho_sum_min + psi * 2^{K r_min} * (2^{R_eff - K r_min} - 1) / lambda_0,
// and the total SNR. Throws InfeasibleError: Backhaul when the effective
// backhaul cannot carry K * r_min, Rate when the caps fall below
// rho_sum_min, Multicast propagated from the outage bound.
double solve_power_subproblem(const ProblemInstance& instance,
                              const CachePolicy& policy);

// Independent route to the same value: bisection on the feasibility
// predicate assembled from the closed-form outage and the backhaul
// constraint. Agrees with the closed form to ~1e-9; kept as a cross-check.
double solve_power_subproblem_bisection(const ProblemInstance& instance,
                                        const CachePolicy& policy);

// Alternating scheme: starting from rho_u = 0 and an empty cache, solve
// the power subproblem under the current policy, then the cache
// subproblem, until the objective changes by at most tol. If the first
// power step is backhaul-infeasible only because the cache is still
// empty, the cache step runs first and the power step retries once.
SolveResult solve_alternating(const ProblemInstance& instance,
                              const SolverOptions& options = {});

struct ConstraintReport {
  std::string name;
  bool satisfied = false;
  double slack = 0.0;       // positive means satisfied with margin
  std::string note;
};

struct FeasibilityReport {
  bool feasible = false;
  std::optional<InfeasibleKind> first_failure;
  std::vector<ConstraintReport> constraints;
};

// Evaluates each constraint family independently (outage power bound,
// minimum-rate budget, backhaul ceiling under the greedy cache) and never
// throws; used by the CLI for diagnostics.
FeasibilityReport feasibility_report(const ProblemInstance& instance);

}  // namespace ncopt
