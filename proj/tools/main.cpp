// noma-cache-opt: scenario solver and sweep driver for the cache-aided
// NOMA hybrid multicast/unicast optimizer.
//
// Exit codes: 0 success, 1 input error, 2 infeasible scenario.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncopt/csv.hpp"
#include "ncopt/errors.hpp"
#include "ncopt/montecarlo.hpp"
#include "ncopt/oma.hpp"
#include "ncopt/outage.hpp"
#include "ncopt/scenario.hpp"
#include "ncopt/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;

void print_error(const std::string& code, const std::string& message) {
  std::cerr << "error: code=" << code << " message=\"" << message << "\"\n";
}

// Every command writes through this so --out and stdout behave the same.
int with_output(const std::string& out_path, const std::function<void(std::ostream&)>& emit) {
  if (out_path.empty()) {
    emit(std::cout);
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    print_error("input", "cannot open output file: " + out_path);
    return kExitInput;
  }
  emit(file);
  return kExitOk;
}

std::vector<double> parse_grid(const std::string& spec) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !in.eof())
    throw ncopt::ScenarioError("grid must look like 'lo:hi:step', got '" + spec + "'");
  if (!(step > 0.0) || hi < lo)
    throw ncopt::ScenarioError("grid needs step > 0 and hi >= lo");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = lo + static_cast<double>(i) * step;
  return grid;
}

std::vector<double> parse_list(const std::string& spec) {
  std::vector<double> values;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw ncopt::ScenarioError("empty entry in list '" + spec + "'");
    values.push_back(std::stod(item));
  }
  if (values.empty()) throw ncopt::ScenarioError("empty list '" + spec + "'");
  return values;
}

std::string join_sig10(std::span<const double> values) {
  std::string joined;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) joined += ',';
    joined += ncopt::format_sig10(values[i]);
  }
  return joined;
}

std::string status_token(const ncopt::SolveStatus status,
                         const std::optional<ncopt::InfeasibleKind>& kind) {
  if (status == ncopt::SolveStatus::Infeasible && kind) return ncopt::to_string(*kind);
  return ncopt::to_string(status);
}

// The per-user allocation behind a solved budget: minimum powers plus the
// optimal excess split.
ncopt::PowerSplit solution_split(const ncopt::ProblemInstance& instance,
                                 const ncopt::SolveResult& result) {
  const std::vector<double> delta = ncopt::optimal_excess_split(
      result.rho_u_star, result.min_profile, instance.r_min);
  std::vector<double> rho_i = result.min_profile.rho_i_min;
  for (std::size_t i = 0; i < rho_i.size(); ++i) rho_i[i] += delta[i];
  ncopt::PowerSplit split = ncopt::PowerSplit::from_snr(0.0, std::move(rho_i));
  split.rho_m = instance.rho - split.rho_u;
  split.rho = instance.rho;
  return split;
}

int cmd_solve(const std::string& scenario_path, const std::string& out_path,
              std::optional<std::uint64_t> seed_override) {
  const ncopt::Scenario scenario = ncopt::parse_scenario_file(scenario_path);
  const ncopt::ProblemInstance instance = scenario.to_instance();
  const ncopt::SolveResult result = ncopt::solve_alternating(instance, scenario.solver);
  const std::uint64_t seed = seed_override.value_or(scenario.seed);

  const int exit_code = with_output(out_path, [&](std::ostream& out) {
    out << "status = " << status_token(result.status, result.infeasible_kind) << "\n";
    if (result.status == ncopt::SolveStatus::Infeasible) {
      out << "message = " << result.message << "\n";
      const ncopt::FeasibilityReport report = ncopt::feasibility_report(instance);
      for (const auto& constraint : report.constraints) {
        out << "constraint_" << constraint.name << " = "
            << (constraint.satisfied ? "ok" : "violated") << " (slack "
            << ncopt::format_sig10(constraint.slack) << ")\n";
      }
      return;
    }
    const ncopt::PowerSplit split = solution_split(instance, result);
    out << "objective = " << ncopt::format_sig10(result.objective) << "\n";
    out << "rho_u_star = " << ncopt::format_sig10(result.rho_u_star) << "\n";
    out << "rho_m_star = " << ncopt::format_sig10(split.rho_m) << "\n";
    out << "rho_sum_min = " << ncopt::format_sig10(result.min_profile.rho_sum_min) << "\n";
    out << "rho_i = " << join_sig10(split.rho_i) << "\n";
    out << "iterations = " << ncopt::format_index(result.trace.size()) << "\n";
    out << "trace = " << join_sig10(result.trace) << "\n";
    out << "cache = " << join_sig10(result.policy.c) << "\n";
    out << "miss_mass = " << ncopt::format_sig10(result.policy.miss) << "\n";
    out << "backhaul_load = "
        << ncopt::format_sig10(ncopt::backhaul_load(result.policy, instance.catalog,
                                                    result.objective))
        << "\n";

    std::vector<double> outage(instance.user_count());
    std::vector<double> rates(instance.user_count());
    for (std::size_t i = 0; i < instance.user_count(); ++i) {
      outage[i] = ncopt::outage_closed_form(instance.qos, split, instance.gains[i],
                                            instance.coeffs.psi);
      rates[i] = ncopt::unicast_rate_relaxed(split, i, instance.lambda[i],
                                             instance.coeffs.psi);
    }
    out << "outage = " << join_sig10(outage) << "\n";
    out << "unicast_rates = " << join_sig10(rates) << "\n";
    out << "seed = " << seed << "\n";
  });
  if (exit_code != kExitOk) return exit_code;

  if (result.status == ncopt::SolveStatus::Infeasible) {
    print_error(status_token(result.status, result.infeasible_kind), result.message);
    return kExitInfeasible;
  }
  return kExitOk;
}

int cmd_sweep_rmin(const std::string& scenario_path, const std::string& grid_spec,
                   bool with_oma, const std::string& out_path) {
  const ncopt::Scenario scenario = ncopt::parse_scenario_file(scenario_path);
  const ncopt::ProblemInstance base = scenario.to_instance();
  const std::vector<double> grid = parse_grid(grid_spec);
  const auto rows = ncopt::sweep_rmin(base, grid, scenario.solver, with_oma,
                                      ncopt::resolve_thread_count());

  return with_output(out_path, [&](std::ostream& out) {
    ncopt::CsvWriter csv(out);
    const std::vector<std::string> header = {"r_min", "noma_sum_rate", "oma_sum_rate",
                                             "status"};
    csv.header(header);
    for (const auto& row : rows) {
      const bool ok = row.status != ncopt::SolveStatus::Infeasible;
      csv.row(std::vector<std::string>{
          ncopt::format_sig10(row.r_min),
          ok ? ncopt::format_sig10(row.noma_objective) : "nan",
          row.oma_feasible ? ncopt::format_sig10(row.oma_sum_rate) : "nan",
          status_token(row.status, row.infeasible_kind)});
    }
  });
}

int cmd_sweep_zipf(const std::string& scenario_path, const std::string& zeta_spec,
                   const std::string& sizes_spec, bool with_oma,
                   const std::string& out_path) {
  const ncopt::Scenario scenario = ncopt::parse_scenario_file(scenario_path);
  const ncopt::ProblemInstance base = scenario.to_instance();
  const std::vector<double> zeta_grid = parse_grid(zeta_spec);
  const std::vector<double> sizes = parse_list(sizes_spec);
  const auto rows = ncopt::sweep_zipf(base, zeta_grid, sizes, scenario.solver,
                                      with_oma, ncopt::resolve_thread_count());

  return with_output(out_path, [&](std::ostream& out) {
    ncopt::CsvWriter csv(out);
    const std::vector<std::string> header = {"zeta", "n", "backhaul_load_noma",
                                             "backhaul_load_oma", "status"};
    csv.header(header);
    for (const auto& row : rows) {
      const bool ok = row.status != ncopt::SolveStatus::Infeasible;
      csv.row(std::vector<std::string>{
          ncopt::format_sig10(row.zeta), ncopt::format_sig10(row.cache_size),
          ok ? ncopt::format_sig10(row.backhaul_load_noma) : "nan",
          row.oma_feasible ? ncopt::format_sig10(row.backhaul_load_oma) : "nan",
          status_token(row.status, row.infeasible_kind)});
    }
  });
}

int cmd_validate_outage(const std::string& scenario_path,
                        std::optional<std::size_t> trials_override,
                        std::optional<std::uint64_t> seed_override,
                        const std::string& out_path) {
  const ncopt::Scenario scenario = ncopt::parse_scenario_file(scenario_path);
  const ncopt::ProblemInstance instance = scenario.to_instance();
  const ncopt::SolveResult result = ncopt::solve_alternating(instance, scenario.solver);
  if (result.status == ncopt::SolveStatus::Infeasible) {
    print_error(status_token(result.status, result.infeasible_kind), result.message);
    return kExitInfeasible;
  }

  ncopt::TrialConfig config;
  config.n_trials = trials_override.value_or(scenario.trials_n);
  config.master_seed = seed_override.value_or(scenario.seed);
  const auto rows =
      ncopt::run_outage_validation(instance, solution_split(instance, result), config);

  return with_output(out_path, [&](std::ostream& out) {
    ncopt::CsvWriter csv(out);
    const std::vector<std::string> header = {"user", "closed_form", "mc_estimate",
                                             "sigma", "pass"};
    csv.header(header);
    for (const auto& row : rows) {
      csv.row(std::vector<std::string>{
          ncopt::format_index(row.user + 1), ncopt::format_sig10(row.closed_form),
          ncopt::format_sig10(row.estimate), ncopt::format_sig10(row.sigma),
          row.within_3sigma ? "1" : "0"});
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cache-aided NOMA hybrid multicast/unicast optimizer"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::string grid_spec = "0.1:1.0:0.1";
  std::string zeta_spec = "0.5:2.0:0.1";
  std::string sizes_spec = "1,2,4";
  bool with_oma = true;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::size_t> trials_override;

  auto* solve = app.add_subcommand("solve", "solve one scenario and write a result document");
  solve->add_option("scenario", scenario_path, "scenario file")->required();
  solve->add_option("--out", out_path, "output path (default: stdout)");
  solve->add_option("--seed", seed_override, "override the scenario seed");

  auto* sweep_rmin = app.add_subcommand("sweep-rmin", "sum rate vs minimum-rate sweep");
  sweep_rmin->add_option("scenario", scenario_path, "scenario file")->required();
  sweep_rmin->add_option("--grid", grid_spec, "r_min grid as lo:hi:step");
  sweep_rmin->add_flag("--oma,!--no-oma", with_oma, "include the OMA baseline column");
  sweep_rmin->add_option("--out", out_path, "CSV output path (default: stdout)");

  auto* sweep_zipf = app.add_subcommand("sweep-zipf", "backhaul load vs Zipf skewness sweep");
  sweep_zipf->add_option("scenario", scenario_path, "scenario file")->required();
  sweep_zipf->add_option("--zeta-grid", zeta_spec, "zeta grid as lo:hi:step");
  sweep_zipf->add_option("--cache-sizes", sizes_spec, "comma list of cache sizes");
  sweep_zipf->add_flag("--oma,!--no-oma", with_oma, "include the OMA baseline column");
  sweep_zipf->add_option("--out", out_path, "CSV output path (default: stdout)");

  auto* validate = app.add_subcommand("validate-outage",
                                      "closed-form vs Monte Carlo outage at the solution");
  validate->add_option("scenario", scenario_path, "scenario file")->required();
  validate->add_option("--trials", trials_override, "Monte Carlo trials per user");
  validate->add_option("--seed", seed_override, "override the scenario seed");
  validate->add_option("--out", out_path, "CSV output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    print_error("input", e.what());
    return kExitInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(scenario_path, out_path, seed_override);
    if (sweep_rmin->parsed())
      return cmd_sweep_rmin(scenario_path, grid_spec, with_oma, out_path);
    if (sweep_zipf->parsed())
      return cmd_sweep_zipf(scenario_path, zeta_spec, sizes_spec, with_oma, out_path);
    if (validate->parsed())
      return cmd_validate_outage(scenario_path, trials_override, seed_override, out_path);
  } catch (const ncopt::InfeasibleError& e) {
    print_error(ncopt::to_string(e.kind()), e.what());
    return kExitInfeasible;
  } catch (const std::exception& e) {
    print_error("input", e.what());
    return kExitInput;
  }
  return kExitInput;
}
