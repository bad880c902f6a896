#include "ncopt/instance.hpp"

#include <cmath>
#include <stdexcept>

namespace ncopt {

void ProblemInstance::validate() const {
  if (lambda.size() != gains.size())
    throw std::invalid_argument("instance: lambda length must match the user count");
  for (double l : lambda)
    if (!(l > 0.0) || !std::isfinite(l))
      throw std::invalid_argument("instance: every lambda must be finite and > 0");
  qos.validate();
  if (!(r_min >= 0.0) || !std::isfinite(r_min))
    throw std::invalid_argument("instance: r_min must be finite and >= 0");
  if (!(rho > 0.0)) throw std::invalid_argument("instance: rho must be > 0");
  if (!(coeffs.psi > 0.0)) throw std::invalid_argument("instance: psi must be > 0");
  if (catalog.file_count() == 0)
    throw std::invalid_argument("instance: catalog must not be empty");
  if (!(cache_capacity >= 0.0))
    throw std::invalid_argument("instance: cache capacity must be >= 0");
  if (!(backhaul >= 0.0))
    throw std::invalid_argument("instance: backhaul must be >= 0");
}

ProblemInstance ProblemInstance::nominal(UserGains gains, CsiCoefficients coeffs,
                                         MulticastQos qos, double r_min, double rho,
                                         Catalog catalog, double cache_capacity,
                                         double backhaul) {
  std::vector<double> lambda = gains.values();
  ProblemInstance instance{std::move(gains), std::move(lambda), coeffs,
                           qos,              r_min,             rho,
                           std::move(catalog), cache_capacity,  backhaul};
  instance.validate();
  return instance;
}

ProblemInstance ProblemInstance::with_lambda(std::vector<double> lambda_realization) const {
  ProblemInstance copy = *this;
  copy.lambda = std::move(lambda_realization);
  copy.validate();
  return copy;
}

}  // namespace ncopt
