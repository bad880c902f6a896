#pragma once

#include <cstdint>
#include <vector>

namespace ncopt {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // exact SI value [m/s]

// Which of {estimate, error} carries the weight sqrt(1 - phi^2) in the
// channel error model  h = w_est * h_hat + w_err * eps.
//
//   AsWritten: w_est = sqrt(1 - phi^2), w_err = phi. A slowly varying
//              channel (phi -> 1) is then dominated by estimation error.
//   Swapped:   w_est = phi, w_err = sqrt(1 - phi^2); the conventional
//              Gauss-Markov weighting where phi -> 1 means a near-perfect
//              estimate.
//
// Every downstream formula consumes the channel only through the derived
// coefficients (a, b, psi), so the convention is isolated to
// csi_coefficients().
enum class CsiConvention { AsWritten, Swapped };

struct ChannelParams {
  double f_c = 0.0;        // carrier frequency [Hz], > 0
  double v = 0.0;          // vehicle speed [m/s], >= 0
  double tau = 0.0;        // gap between adjacent slots [s], > 0
  double omega_eps = 0.0;  // estimation-error variance, >= 0
  CsiConvention convention = CsiConvention::AsWritten;

  void validate() const;  // throws std::domain_error on a bad field
};

// Interference bookkeeping constants of the imperfect-CSI SINRs.
//   a   : noise scaling (>= 1 under AsWritten)
//   b   : error leakage per unit of interfering SNR
//   psi : rho * b + a evaluated at the *total* transmit SNR rho; it does
//         not depend on how rho is split between multicast and unicast.
struct CsiCoefficients {
  double a = 1.0;
  double b = 0.0;
  double psi = 1.0;
};

// Zeroth-order Bessel function of the first kind. Alternating power
// series sum_k (-x^2/4)^k / (k!)^2 truncated once a term falls below
// 1e-18 of the running sum; absolute error stays under 1e-12 for
// |x| <= 12. Larger arguments use the Hankel asymptotic form (roughly
// 1e-9 absolute). Throws std::domain_error on non-finite input.
double bessel_j0(double x);

// Temporal fading correlation of a vehicular link:
// phi = J0(2 pi f_c v tau / c).
double jakes_phi(const ChannelParams& params);

// Derives (a, b, psi) from the correlation phi, the error variance and
// the total SNR. AsWritten requires |phi| < 1; Swapped requires phi != 0.
CsiCoefficients csi_coefficients(double phi, double omega_eps, double rho,
                                 CsiConvention convention = CsiConvention::AsWritten);

// Average channel gain variances, one per user, strongest first.
class UserGains {
 public:
  // `omega` must be sorted non-increasing with every entry > 0.
  explicit UserGains(std::vector<double> omega);

  std::size_t size() const noexcept { return omega_.size(); }
  double operator[](std::size_t i) const { return omega_.at(i); }
  const std::vector<double>& values() const noexcept { return omega_; }

 private:
  std::vector<double> omega_;
};

// n_trials independent Exp(mean = omega[i]) draws per user; result[i] is
// the column for user i. Deterministic in `seed`; each user gets an
// independent sub-stream, so columns do not shift when users are added.
std::vector<std::vector<double>> sample_gains(const UserGains& gains,
                                              std::uint64_t seed,
                                              std::size_t n_trials);

}  // namespace ncopt
