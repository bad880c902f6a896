#include "ncopt/cache.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ncopt {

Catalog zipf_popularity(std::size_t file_count, double zeta) {
  if (file_count == 0) throw std::invalid_argument("catalog: need at least one file");
  if (!(zeta >= 0.0)) throw std::domain_error("catalog: zeta must be >= 0");

  Catalog catalog;
  catalog.zeta = zeta;
  catalog.q.resize(file_count);
  double norm = 0.0;
  for (std::size_t f = 0; f < file_count; ++f) {
    catalog.q[f] = std::pow(static_cast<double>(f + 1), -zeta);
    norm += catalog.q[f];
  }
  for (double& q : catalog.q) q /= norm;
  return catalog;
}

CachePolicy empty_cache(std::size_t file_count, double capacity) {
  CachePolicy policy;
  policy.c.assign(file_count, 0.0);
  policy.capacity = capacity;
  policy.miss = 1.0;
  return policy;
}

double miss_mass(const Catalog& catalog, std::span<const double> c) {
  if (c.size() != catalog.file_count())
    throw std::invalid_argument("cache: policy length must match the catalog");
  double miss = 0.0;
  for (std::size_t f = 0; f < c.size(); ++f) miss += catalog.q[f] * (1.0 - c[f]);
  return miss;
}

double backhaul_load(const CachePolicy& policy, const Catalog& catalog,
                     double sum_rate) {
  return miss_mass(catalog, policy.c) * sum_rate;
}

CachePolicy solve_cache_subproblem(const Catalog& catalog, double capacity) {
  if (!(capacity >= 0.0)) throw std::domain_error("cache: capacity must be >= 0");
  CachePolicy policy;
  policy.capacity = capacity;
  policy.c.assign(catalog.file_count(), 0.0);

  // Popularity is already sorted non-increasing, so the top prefix is the
  // extreme point that minimizes the miss mass.
  double remaining = std::min(capacity, static_cast<double>(catalog.file_count()));
  for (std::size_t f = 0; f < policy.c.size() && remaining > 0.0; ++f) {
    policy.c[f] = std::min(1.0, remaining);
    remaining -= policy.c[f];
  }
  policy.miss = miss_mass(catalog, policy.c);
  return policy;
}

double effective_backhaul(double backhaul, double miss) {
  if (!(backhaul >= 0.0)) throw std::domain_error("cache: backhaul must be >= 0");
  if (miss <= 0.0) return std::numeric_limits<double>::infinity();
  return backhaul / miss;
}

}  // namespace ncopt
