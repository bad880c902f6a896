#include "ncopt/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ncopt/outage.hpp"
#include "ncopt/rng.hpp"

namespace ncopt {

namespace {

// Index-based parallel map: each worker claims the next undone slot, so
// results land in deterministic positions regardless of thread count.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<double> sample_realization(const UserGains& gains, std::uint64_t seed,
                                       bool resort) {
  Rng rng(seed);
  std::vector<double> lambda(gains.size());
  for (std::size_t i = 0; i < gains.size(); ++i)
    lambda[i] = rng.exponential(gains[i]);
  if (resort) std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return lambda;
}

}  // namespace

std::vector<OutageValidation> run_outage_validation(const ProblemInstance& instance,
                                                    const PowerSplit& split,
                                                    const TrialConfig& config) {
  instance.validate();
  if (config.n_trials == 0)
    throw std::invalid_argument("trials: n_trials must be >= 1");

  const double theta = instance.qos.theta();
  std::vector<OutageValidation> rows(instance.user_count());
  for (std::size_t user = 0; user < rows.size(); ++user) {
    OutageValidation& row = rows[user];
    row.user = user;
    row.valid_regime = theta == 0.0 || split.rho_m > theta * split.rho_u;
    row.closed_form = outage_closed_form(instance.qos, split, instance.gains[user],
                                         instance.coeffs.psi);
    row.estimate = outage_monte_carlo(instance.qos, split, instance.gains[user],
                                      instance.coeffs, config.n_trials,
                                      derive_stream_seed(config.master_seed, user));
    row.sigma = std::sqrt(row.closed_form * (1.0 - row.closed_form) /
                          static_cast<double>(config.n_trials));
    row.within_3sigma = std::abs(row.closed_form - row.estimate) <= 3.0 * row.sigma ||
                        (row.sigma == 0.0 && row.estimate == row.closed_form);
  }
  return rows;
}

std::vector<RminSweepRow> sweep_rmin(const ProblemInstance& base,
                                     std::span<const double> r_min_grid,
                                     const SolverOptions& options,
                                     bool with_oma, unsigned threads) {
  base.validate();
  std::vector<RminSweepRow> rows(r_min_grid.size());
  parallel_for(r_min_grid.size(), threads, [&](std::size_t i) {
    ProblemInstance instance = base;
    instance.r_min = r_min_grid[i];
    RminSweepRow& row = rows[i];
    row.r_min = r_min_grid[i];

    const SolveResult result = solve_alternating(instance, options);
    row.status = result.status;
    row.infeasible_kind = result.infeasible_kind;
    if (result.ok()) {
      row.noma_objective = result.objective;
      row.backhaul_load_noma =
          backhaul_load(result.policy, instance.catalog, result.objective);
    }
    if (with_oma) {
      try {
        const OmaAllocation oma = oma_rates(instance);
        row.oma_feasible = true;
        row.oma_sum_rate = oma.sum_rate;
        row.backhaul_load_oma =
            backhaul_load(oma.policy, instance.catalog, oma.sum_rate);
      } catch (const InfeasibleError&) {
        row.oma_feasible = false;
      }
    }
  });
  return rows;
}

std::vector<ZipfSweepRow> sweep_zipf(const ProblemInstance& base,
                                     std::span<const double> zeta_grid,
                                     std::span<const double> cache_sizes,
                                     const SolverOptions& options,
                                     bool with_oma, unsigned threads) {
  base.validate();
  std::vector<ZipfSweepRow> rows(zeta_grid.size() * cache_sizes.size());
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    const double zeta = zeta_grid[i / cache_sizes.size()];
    const double cache_size = cache_sizes[i % cache_sizes.size()];

    ProblemInstance instance = base;
    instance.catalog = zipf_popularity(base.catalog.file_count(), zeta);
    instance.cache_capacity = cache_size;

    ZipfSweepRow& row = rows[i];
    row.zeta = zeta;
    row.cache_size = cache_size;

    const SolveResult result = solve_alternating(instance, options);
    row.status = result.status;
    row.infeasible_kind = result.infeasible_kind;
    if (result.ok()) {
      row.noma_objective = result.objective;
      row.backhaul_load_noma =
          backhaul_load(result.policy, instance.catalog, result.objective);
    }
    if (with_oma) {
      try {
        const OmaAllocation oma = oma_rates(instance);
        row.oma_feasible = true;
        row.oma_sum_rate = oma.sum_rate;
        row.backhaul_load_oma =
            backhaul_load(oma.policy, instance.catalog, oma.sum_rate);
      } catch (const InfeasibleError&) {
        row.oma_feasible = false;
      }
    }
  });
  return rows;
}

std::vector<TrialOutcome> run_solve_trials(const ProblemInstance& instance,
                                           const TrialConfig& config,
                                           const SolverOptions& options) {
  instance.validate();
  if (config.n_trials == 0)
    throw std::invalid_argument("trials: n_trials must be >= 1");

  std::vector<TrialOutcome> outcomes(config.n_trials);
  for (std::size_t t = 0; t < config.n_trials; ++t) {
    ProblemInstance trial_instance =
        config.mode == TrialMode::SampledGains
            ? instance.with_lambda(sample_realization(
                  instance.gains, derive_stream_seed(config.master_seed, t),
                  config.resort_sampled))
            : instance;
    const SolveResult result = solve_alternating(trial_instance, options);
    outcomes[t] = {t, result.status, result.objective, result.rho_u_star};
  }
  return outcomes;
}

unsigned resolve_thread_count() {
  unsigned count = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NOMA_CACHE_OPT_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0)
      count = std::min<unsigned>(count, static_cast<unsigned>(cap));
  }
  return count;
}

}  // namespace ncopt
