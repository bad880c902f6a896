#include "ncopt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ncopt/outage.hpp"
#include "ncopt/rates.hpp"

namespace ncopt {

const char* to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIterations: return "max_iterations";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double backhaul_power_cap(const ProblemInstance& instance,
                          const MinPowerProfile& profile, double r_eff) {
  const double base_rate =
      static_cast<double>(instance.user_count()) * instance.r_min;
  if (r_eff < base_rate) {
    std::ostringstream msg;
    msg << "effective backhaul " << r_eff << " cannot carry the minimum-rate load "
        << base_rate;
    throw InfeasibleError(InfeasibleKind::Backhaul, msg.str(), r_eff);
  }
  if (!std::isfinite(r_eff)) return kInf;
  const double head = r_eff - base_rate;  // admissible rate above K * r_min
  const double k_scale = std::exp2(
      static_cast<double>(instance.user_count()) * instance.r_min);
  return profile.rho_sum_min +
         instance.coeffs.psi * k_scale * (std::exp2(head) - 1.0) / instance.lambda[0];
}

}  // namespace

double solve_power_subproblem(const ProblemInstance& instance,
                              const CachePolicy& policy) {
  instance.validate();
  const double psi = instance.coeffs.psi;
  const MinPowerProfile profile =
      min_power_closed_form(instance.r_min, instance.lambda, psi);

  const OutagePowerBound outage_cap =
      outage_power_bound(instance.qos, instance.gains, psi, instance.rho);

  // The minimum-rate budget is independent of the cache, so it is checked
  // before the backhaul family.
  const double slack = 1e-12 * std::max(1.0, profile.rho_sum_min);
  const double power_cap = std::min(outage_cap.bound, instance.rho);
  if (power_cap < profile.rho_sum_min - slack) {
    std::ostringstream msg;
    msg << "largest admissible rho_u " << power_cap
        << " below the minimum-rate requirement " << profile.rho_sum_min;
    throw InfeasibleError(InfeasibleKind::Rate, msg.str(), profile.rho_sum_min);
  }

  const double r_eff =
      effective_backhaul(instance.backhaul, miss_mass(instance.catalog, policy.c));
  const double backhaul_cap = backhaul_power_cap(instance, profile, r_eff);

  const double rho_u = std::min(power_cap, backhaul_cap);
  return std::min(std::max(rho_u, profile.rho_sum_min), instance.rho);
}

double solve_power_subproblem_bisection(const ProblemInstance& instance,
                                        const CachePolicy& policy) {
  instance.validate();
  const double psi = instance.coeffs.psi;
  const std::size_t k = instance.user_count();
  const MinPowerProfile profile =
      min_power_recurrence(instance.r_min, instance.lambda, psi);
  const double r_eff =
      effective_backhaul(instance.backhaul, miss_mass(instance.catalog, policy.c));
  const double base_rate = static_cast<double>(k) * instance.r_min;

  const auto feasible = [&](double rho_u) {
    if (rho_u > instance.rho || rho_u < profile.rho_sum_min) return false;
    PowerSplit split;
    split.rho = instance.rho;
    split.rho_u = rho_u;
    split.rho_m = instance.rho - rho_u;
    split.rho_i.assign(k, 0.0);  // outage depends on the totals only
    for (std::size_t i = 0; i < k; ++i) {
      const double p =
          outage_closed_form(instance.qos, split, instance.gains[i], psi);
      if (p > instance.qos.delta_out * (1.0 + 1e-12)) return false;
    }
    const double obj =
        base_rate +
        optimal_excess_rate(rho_u, profile, instance.lambda[0], psi, k, instance.r_min);
    return obj <= r_eff * (1.0 + 1e-12) + 1e-12;
  };

  if (!feasible(profile.rho_sum_min))
    throw InfeasibleError(InfeasibleKind::Rate,
                          "bisection: no admissible unicast budget",
                          profile.rho_sum_min);
  if (feasible(instance.rho)) return instance.rho;

  double lo = profile.rho_sum_min;
  double hi = instance.rho;
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

SolveResult solve_alternating(const ProblemInstance& instance,
                              const SolverOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("solver: tol must be > 0");
  if (options.max_iter == 0)
    throw std::invalid_argument("solver: max_iter must be >= 1");
  instance.validate();

  SolveResult result;
  result.policy = empty_cache(instance.catalog.file_count(), instance.cache_capacity);

  const double psi = instance.coeffs.psi;
  const std::size_t k = instance.user_count();
  try {
    double prev_obj = 0.0;
    for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
      double rho_u;
      try {
        rho_u = solve_power_subproblem(instance, result.policy);
      } catch (const InfeasibleError& err) {
        // The empty initial cache can under-report the backhaul ceiling;
        // placing the cache first and retrying decides whether the
        // instance is really backhaul-infeasible.
        if (err.kind() != InfeasibleKind::Backhaul || iter != 1) throw;
        result.policy =
            solve_cache_subproblem(instance.catalog, instance.cache_capacity);
        rho_u = solve_power_subproblem(instance, result.policy);
      }
      result.policy =
          solve_cache_subproblem(instance.catalog, instance.cache_capacity);
      result.min_profile =
          min_power_closed_form(instance.r_min, instance.lambda, psi);
      const double obj =
          static_cast<double>(k) * instance.r_min +
          optimal_excess_rate(rho_u, result.min_profile, instance.lambda[0], psi,
                              k, instance.r_min);
      result.trace.push_back(obj);
      result.rho_u_star = rho_u;
      result.objective = obj;
      if (result.trace.size() >= 2 && std::abs(obj - prev_obj) <= options.tol) {
        result.status = SolveStatus::Converged;
        return result;
      }
      prev_obj = obj;
    }
    result.status = SolveStatus::MaxIterations;
    result.message = "objective still moving after max_iter iterations";
  } catch (const InfeasibleError& err) {
    result.status = SolveStatus::Infeasible;
    result.infeasible_kind = err.kind();
    result.message = err.what();
    result.objective = std::numeric_limits<double>::quiet_NaN();
    result.rho_u_star = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

FeasibilityReport feasibility_report(const ProblemInstance& instance) {
  instance.validate();
  FeasibilityReport report;
  const double psi = instance.coeffs.psi;
  const std::size_t k = instance.user_count();
  const MinPowerProfile profile =
      min_power_closed_form(instance.r_min, instance.lambda, psi);

  // Outage family: does any positive unicast budget keep every user inside
  // the outage target?
  {
    ConstraintReport c{"multicast_outage_bound", false, 0.0,
                       "largest unicast SNR admitted by the outage target"};
    try {
      c.slack = outage_power_bound(instance.qos, instance.gains, psi, instance.rho).bound;
      c.satisfied = true;
    } catch (const InfeasibleError& err) {
      c.slack = err.value();
    }
    report.constraints.push_back(std::move(c));
  }

  // Minimum-rate family: the total SNR must cover rho_sum_min.
  report.constraints.push_back(
      {"minimum_rate_budget", profile.rho_sum_min <= instance.rho,
       instance.rho - profile.rho_sum_min,
       "total SNR minus the minimum-rate requirement"});

  // Backhaul family under the greedy cache placement.
  const CachePolicy greedy =
      solve_cache_subproblem(instance.catalog, instance.cache_capacity);
  const double r_eff = effective_backhaul(instance.backhaul, greedy.miss);
  const double base_rate = static_cast<double>(k) * instance.r_min;
  report.constraints.push_back({"backhaul_ceiling", r_eff >= base_rate,
                                r_eff - base_rate,
                                "effective backhaul minus the minimum-rate load"});

  try {
    solve_power_subproblem(instance, greedy);
    report.feasible = true;
  } catch (const InfeasibleError& err) {
    report.feasible = false;
    report.first_failure = err.kind();
  }
  return report;
}

}  // namespace ncopt
