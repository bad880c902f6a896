#include <cmath>
#include <limits>

#include <doctest.h>

#include "ncopt/channel.hpp"
#include "support/oracles.hpp"

using namespace ncopt;
using ncopt::testing::bessel_j0_oracle;
using ncopt::testing::bisect_root;
using ncopt::testing::ks_statistic;

namespace {
constexpr double kFirstJ0Root = 2.404825557695773;

ChannelParams highway_params() {
  ChannelParams params;
  params.f_c = 5.9e9;
  params.v = 41.6667;  // 150 km/h
  params.tau = 1e-6;
  params.omega_eps = 0.1;
  return params;
}
}  // namespace

TEST_SUITE("channel") {

TEST_CASE("bessel_j0 basics") {
  CHECK(bessel_j0(0.0) == 1.0);
  CHECK(std::abs(bessel_j0(kFirstJ0Root)) < 1e-9);
  CHECK(bessel_j0(0.0051487) == doctest::Approx(0.99999337).epsilon(1e-8));
  CHECK(bessel_j0(-3.0) == bessel_j0(3.0));  // even function
  CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("bessel_j0 matches the series oracle on [0, 10]") {
  for (int i = 0; i <= 1000; ++i) {
    const double x = 10.0 * i / 1000.0;
    CHECK(std::abs(bessel_j0(x) - bessel_j0_oracle(x)) < 1e-10);
  }
}

TEST_CASE("bessel_j0 asymptotic branch stays consistent") {
  // The long-double series oracle is still good to ~1e-12 here.
  for (double x : {12.5, 13.0, 14.0, 15.0}) {
    CHECK(bessel_j0(x) == doctest::Approx(bessel_j0_oracle(x)).epsilon(1e-7));
  }
}

TEST_CASE("first root located by bisection") {
  const double root_impl = bisect_root([](double x) { return bessel_j0(x); }, 2.0, 3.0);
  const double root_oracle =
      bisect_root([](double x) { return bessel_j0_oracle(x); }, 2.0, 3.0);
  CHECK(std::abs(root_impl - kFirstJ0Root) < 1e-9);
  CHECK(std::abs(root_oracle - kFirstJ0Root) < 1e-9);
}

TEST_CASE("jakes_phi at the highway scenario") {
  CHECK(jakes_phi(highway_params()) == doctest::Approx(0.9999934).epsilon(1e-7));

  ChannelParams still = highway_params();
  still.v = 0.0;
  CHECK(jakes_phi(still) == 1.0);
}

TEST_CASE("jakes_phi vanishes when the argument hits the first root") {
  ChannelParams params = highway_params();
  // Speed that puts 2 pi f_c v tau / c exactly at the first root.
  params.v = kFirstJ0Root * kSpeedOfLight /
             (2.0 * 3.14159265358979323846 * params.f_c * params.tau);
  CHECK(std::abs(jakes_phi(params)) < 1e-9);
}

TEST_CASE("jakes_phi is non-increasing in speed up to the first root") {
  ChannelParams params = highway_params();
  const double v_root = kFirstJ0Root * kSpeedOfLight /
                        (2.0 * 3.14159265358979323846 * params.f_c * params.tau);
  double prev = 1.0;
  for (int i = 0; i <= 50; ++i) {
    params.v = v_root * i / 50.0;
    const double phi = jakes_phi(params);
    CHECK(phi <= prev + 1e-15);
    prev = phi;
  }
}

TEST_CASE("jakes_phi validates inputs") {
  ChannelParams params = highway_params();
  params.tau = 0.0;
  CHECK_THROWS_AS(jakes_phi(params), std::domain_error);
  params = highway_params();
  params.f_c = -1.0;
  CHECK_THROWS_AS(jakes_phi(params), std::domain_error);
}

TEST_CASE("csi_coefficients examples") {
  SUBCASE("phi = 0 under as-written removes the error weight") {
    const CsiCoefficients c = csi_coefficients(0.0, 0.1, 10.0);
    CHECK(c.a == 1.0);
    CHECK(c.b == 0.0);
    CHECK(c.psi == 1.0);
  }
  SUBCASE("phi = 0.5 arithmetic") {
    const CsiCoefficients c = csi_coefficients(0.5, 0.1, 10.0);
    CHECK(c.a == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(c.b == doctest::Approx(1.0 / 30.0).epsilon(1e-15));
    CHECK(c.psi == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("highway phi under the swapped convention") {
    const CsiCoefficients c =
        csi_coefficients(0.9999934, 0.1, 10.0, CsiConvention::Swapped);
    CHECK(c.a == doctest::Approx(1.0000132).epsilon(1e-6));
    CHECK(c.b == doctest::Approx(1.32e-6).epsilon(2e-2));
    CHECK(c.psi == doctest::Approx(1.0000264).epsilon(1e-6));
  }
}

TEST_CASE("csi_coefficients rejects degenerate conventions") {
  CHECK_THROWS_AS(csi_coefficients(1.0, 0.1, 10.0, CsiConvention::AsWritten),
                  std::domain_error);
  CHECK_THROWS_AS(csi_coefficients(0.0, 0.1, 10.0, CsiConvention::Swapped),
                  std::domain_error);
  CHECK_THROWS_AS(csi_coefficients(0.5, -0.1, 10.0), std::domain_error);
}

TEST_CASE("psi is affine in rho with slope b") {
  const double phi = 0.37;
  const double omega_eps = 0.21;
  const CsiCoefficients lo = csi_coefficients(phi, omega_eps, 3.0);
  const CsiCoefficients hi = csi_coefficients(phi, omega_eps, 29.0);
  CHECK(hi.psi - lo.psi == doctest::Approx(lo.b * 26.0).epsilon(1e-12));
  CHECK(lo.a == hi.a);
  CHECK(lo.b == hi.b);
}

TEST_CASE("user gains validate ordering and positivity") {
  CHECK_NOTHROW(UserGains({10.0, 5.0, 1.0}));
  CHECK_THROWS_AS(UserGains({5.0, 10.0}), std::invalid_argument);
  CHECK_THROWS_AS(UserGains({5.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(UserGains({}), std::invalid_argument);
}

TEST_CASE("sample_gains columns have the right means") {
  const UserGains gains({10.0, 5.0});
  const auto columns = sample_gains(gains, 42, 1'000'000);
  for (std::size_t user = 0; user < gains.size(); ++user) {
    double mean = 0.0;
    for (const double x : columns[user]) mean += x;
    mean /= static_cast<double>(columns[user].size());
    CHECK(mean == doctest::Approx(gains[user]).epsilon(0.01));
  }
}

TEST_CASE("sample_gains is deterministic and positive") {
  const UserGains gains({1.0});
  const auto one = sample_gains(gains, 7, 1);
  CHECK(one[0][0] > 0.0);

  const auto a = sample_gains(UserGains({10.0, 5.0}), 123, 1000);
  const auto b = sample_gains(UserGains({10.0, 5.0}), 123, 1000);
  CHECK(a == b);
  const auto c = sample_gains(UserGains({10.0, 5.0}), 124, 1000);
  CHECK(a != c);
}

TEST_CASE("sample_gains matches the exponential CDF (Kolmogorov-Smirnov)") {
  const UserGains gains({10.0, 5.0, 2.0});
  const std::size_t n = 100'000;
  const auto columns = sample_gains(gains, 2026, n);
  // 1% critical value for the KS statistic.
  const double critical = 1.6276 / std::sqrt(static_cast<double>(n));
  for (std::size_t user = 0; user < gains.size(); ++user) {
    const double omega = gains[user];
    const double stat = ks_statistic(
        columns[user], [omega](double x) { return 1.0 - std::exp(-x / omega); });
    CHECK(stat < critical);
  }
}

}  // TEST_SUITE
