#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ncopt {

// Content catalog with Zipf popularity. q[f] is the request probability
// of file f (0-based rank), non-increasing, summing to 1.
struct Catalog {
  std::vector<double> q;
  double zeta = 0.0;

  std::size_t file_count() const noexcept { return q.size(); }
};

// q_f = f^{-zeta} / sum_j j^{-zeta} over ranks 1..file_count.
Catalog zipf_popularity(std::size_t file_count, double zeta);

// Per-file caching probabilities plus the resulting request mass that
// misses the cache and must cross the backhaul.
struct CachePolicy {
  std::vector<double> c;   // each in [0, 1], sum <= capacity
  double capacity = 0.0;   // N, in files; fractional values allowed
  double miss = 1.0;       // sum_f q_f * (1 - c_f)
};

// All-miss policy (c = 0) for a catalog of the given size.
CachePolicy empty_cache(std::size_t file_count, double capacity);

double miss_mass(const Catalog& catalog, std::span<const double> c);

// Backhaul traffic generated by a unicast sum rate under a policy:
// miss mass times the rate.
double backhaul_load(const CachePolicy& policy, const Catalog& catalog,
                     double sum_rate);

// Cache-placement subproblem: the objective is linear in c_f with a single
// capacity constraint, so a top-popularity prefix (with at most one
// fractional file) minimizes the miss mass and maximizes the effective
// backhaul ceiling. Ties in popularity resolve to the lowest file index.
CachePolicy solve_cache_subproblem(const Catalog& catalog, double capacity);

// R / miss; +infinity when the miss mass is zero (constraint vacuous).
double effective_backhaul(double backhaul, double miss);

}  // namespace ncopt
