#include "ncopt/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncopt/rng.hpp"

namespace ncopt {

void ChannelParams::validate() const {
  if (!(f_c > 0.0)) throw std::domain_error("channel: f_c must be > 0");
  if (!(tau > 0.0)) throw std::domain_error("channel: tau must be > 0");
  if (!(v >= 0.0)) throw std::domain_error("channel: v must be >= 0");
  if (!(omega_eps >= 0.0)) throw std::domain_error("channel: omega_eps must be >= 0");
}

namespace {

double bessel_j0_series(double x) {
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Hankel form for large arguments:
//   sqrt(2 / (pi x)) * (P(x) cos(x - pi/4) - Q(x) sin(x - pi/4))
// with the first few terms of the modulus series.
double bessel_j0_asymptotic(double x) {
  const double inv2 = 1.0 / (x * x);
  const double p = 1.0 + inv2 * (-9.0 / 128.0 + inv2 * (3675.0 / 32768.0 - inv2 * 2401245.0 / 4194304.0));
  const double q = (1.0 / x) * (-1.0 / 8.0 + inv2 * (75.0 / 1024.0 - inv2 * 59535.0 / 262144.0));
  const double chi = x - std::numbers::pi / 4.0;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j0(double x) {
  if (!std::isfinite(x)) throw std::domain_error("bessel_j0: non-finite argument");
  x = std::abs(x);  // even function
  if (x == 0.0) return 1.0;
  if (x <= 12.0) return bessel_j0_series(x);
  return bessel_j0_asymptotic(x);
}

double jakes_phi(const ChannelParams& params) {
  params.validate();
  const double arg = 2.0 * std::numbers::pi * params.f_c * params.v * params.tau / kSpeedOfLight;
  return bessel_j0(arg);
}

CsiCoefficients csi_coefficients(double phi, double omega_eps, double rho,
                                 CsiConvention convention) {
  if (!std::isfinite(phi)) throw std::domain_error("csi: non-finite phi");
  if (!(omega_eps >= 0.0)) throw std::domain_error("csi: omega_eps must be >= 0");
  if (!(rho >= 0.0)) throw std::domain_error("csi: rho must be >= 0");

  CsiCoefficients coeffs;
  const double phi2 = phi * phi;
  if (convention == CsiConvention::AsWritten) {
    if (!(std::abs(phi) < 1.0))
      throw std::domain_error("csi: |phi| must be < 1 under the as-written convention");
    coeffs.a = 1.0 / (1.0 - phi2);
    coeffs.b = phi2 * omega_eps / (1.0 - phi2);
  } else {
    if (phi == 0.0)
      throw std::domain_error("csi: phi must be non-zero under the swapped convention");
    coeffs.a = 1.0 / phi2;
    coeffs.b = (1.0 - phi2) * omega_eps / phi2;
  }
  coeffs.psi = rho * coeffs.b + coeffs.a;
  return coeffs;
}

UserGains::UserGains(std::vector<double> omega) : omega_(std::move(omega)) {
  if (omega_.empty()) throw std::invalid_argument("gains: need at least one user");
  for (std::size_t i = 0; i < omega_.size(); ++i) {
    if (!(omega_[i] > 0.0) || !std::isfinite(omega_[i]))
      throw std::invalid_argument("gains: every omega must be finite and > 0");
    if (i > 0 && omega_[i] > omega_[i - 1])
      throw std::invalid_argument("gains: omega must be sorted non-increasing");
  }
}

std::vector<std::vector<double>> sample_gains(const UserGains& gains,
                                              std::uint64_t seed,
                                              std::size_t n_trials) {
  if (n_trials == 0) throw std::invalid_argument("sample_gains: n_trials must be >= 1");
  std::vector<std::vector<double>> columns(gains.size());
  for (std::size_t user = 0; user < gains.size(); ++user) {
    Rng rng(derive_stream_seed(seed, user));
    auto& column = columns[user];
    column.resize(n_trials);
    for (std::size_t t = 0; t < n_trials; ++t) column[t] = rng.exponential(gains[user]);
  }
  return columns;
}

}  // namespace ncopt
