#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rindler/bogoliubov.hpp"
#include "rindler/error.hpp"

using namespace rindler;
using namespace rindler::bogoliubov;

namespace {

// Coefficients straight from the Bogoliubov prefactors, in extended precision.
struct Literal {
  long double q, c, s;
};
Literal literal(long double omega) {
  const long double pi = std::numbers::pi_v<long double>;
  const long double denom = std::sqrt(2.0L * std::sinh(pi * omega));
  return {std::exp(-pi * omega), std::exp(pi * omega / 2) / denom, std::exp(-pi * omega / 2) / denom};
}

double sum_squares(const CoefficientSeries& s) {
  long double acc = 0.0L;
  for (double c : s.coeffs) acc += static_cast<long double>(c) * c;
  return static_cast<double>(acc);
}

}  // namespace

TEST_CASE("omega_from_energy") {
  CHECK(omega_from_energy(1.0, 1.0) == 1.0);
  CHECK(omega_from_energy(2.0, 4.0) == 0.5);
  CHECK(omega_from_energy(1.0, 1e12) == doctest::Approx(1e-12));
  CHECK_THROWS_AS(omega_from_energy(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(omega_from_energy(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(omega_from_energy(-1.0, 1.0), DomainError);
}

TEST_CASE("squeeze_from_omega examples") {
  const double w = std::log(2.0) / std::numbers::pi;
  const auto p = squeeze_from_omega(w);
  CHECK(p.q == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.cosh_coeff == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(p.sinh_coeff == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

  const auto big = squeeze_from_omega(50.0);
  CHECK(big.q < 1e-60);
  CHECK(big.cosh_coeff == 1.0);
  CHECK(big.sinh_coeff < 1e-60);

  const auto one = squeeze_from_omega(1.0);
  const auto lit = literal(1.0L);
  CHECK(std::abs(one.q - 0.0432139182637722) < 1e-15);
  CHECK(std::abs(one.q - static_cast<double>(lit.q)) <= 1e-17);
  CHECK(std::abs(one.cosh_coeff - static_cast<double>(lit.c)) <= 1e-15);
  CHECK(std::abs(one.sinh_coeff - static_cast<double>(lit.s)) <= 1e-16);
  CHECK(std::abs(one.cosh_coeff * one.cosh_coeff - one.sinh_coeff * one.sinh_coeff - 1.0) <= 1e-15);
  CHECK(std::abs(one.sinh_coeff / one.cosh_coeff - one.q) <= 1e-16);

  CHECK_THROWS_AS(squeeze_from_omega(0.0), DomainError);
  CHECK_THROWS_AS(squeeze_from_omega(-1.0), DomainError);
  CHECK_THROWS_AS(squeeze_from_omega(1e-300), NumericalRangeError);
}

TEST_CASE("squeeze_from_q") {
  const auto p = squeeze_from_q(0.0);
  CHECK(p.q == 0.0);
  CHECK(std::isinf(p.omega));
  CHECK(p.cosh_coeff == 1.0);
  CHECK(p.sinh_coeff == 0.0);
  const auto h = squeeze_from_q(0.5);
  CHECK(h.omega == doctest::Approx(std::log(2.0) / std::numbers::pi).epsilon(1e-15));
  CHECK_THROWS_AS(squeeze_from_q(1.0), DomainError);
  CHECK_THROWS_AS(squeeze_from_q(-0.1), DomainError);
}

TEST_CASE("property: Bogoliubov identity over log-spaced omega") {
  for (int i = 0; i < 100; ++i) {
    const double w = 1e-3 * std::pow(2e4, i / 99.0);
    const auto p = squeeze_from_omega(w);
    CAPTURE(w);
    CHECK(std::abs(p.cosh_coeff * p.cosh_coeff - p.sinh_coeff * p.sinh_coeff - 1.0) <= 1e-13);
    CHECK(p.q > 0.0);
    CHECK(p.q < 1.0);
    const auto lit = literal(w);
    CHECK(std::abs(p.cosh_coeff - static_cast<double>(lit.c)) <= 1e-14 * p.cosh_coeff);
  }
}

TEST_CASE("vacuum_expansion examples") {
  auto s = vacuum_expansion(squeeze_from_q(0.0), 5);
  CHECK(s.kind == SeriesKind::vacuum);
  CHECK(s.coeffs == std::vector<double>{1, 0, 0, 0, 0, 0});
  CHECK(s.tail_bound == 0.0);

  s = vacuum_expansion(squeeze_from_q(0.5), 0);
  REQUIRE(s.coeffs.size() == 1);
  CHECK(s.coeffs[0] == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
  CHECK(s.tail_bound == 0.25);

  s = vacuum_expansion(squeeze_from_q(0.5), 30);
  CHECK(s.tail_bound == std::ldexp(1.0, -62));
  CHECK(std::abs(sum_squares(s) - (1.0 - std::ldexp(1.0, -62))) <= 1e-15);
  CHECK_THROWS_AS(vacuum_expansion(squeeze_from_q(0.5), -1), DomainError);
}

TEST_CASE("one_particle_expansion examples") {
  auto s = one_particle_expansion(squeeze_from_q(0.0), 3);
  CHECK(s.coeffs == std::vector<double>{1, 0, 0, 0});
  CHECK(s.tail_bound == 0.0);

  // (1 - q^2)^2 sum (n+1) q^(2n) = (9/16)(16/9) at q = 1/2.
  s = one_particle_expansion(squeeze_from_q(0.5), 0);
  CHECK(s.coeffs[0] == 0.75);
  CHECK(std::abs(s.coeffs[0] * s.coeffs[0] + s.tail_bound - 1.0) <= 1e-16);

  s = one_particle_expansion(squeeze_from_q(0.9), 200);
  // Oracle: the closed-form tail x^M (1 + M(1-x)) with M = 201, x = 0.81.
  const long double x = 0.81L;
  const long double oracle_tail = std::pow(x, 201.0L) * (1.0L + 201.0L * (1.0L - x));
  CHECK(std::abs(s.tail_bound - static_cast<double>(oracle_tail)) <= 1e-30);
  CHECK(sum_squares(s) >= 1.0 - 1e-12);
}

TEST_CASE("analytic tail agrees with explicit remainder summation") {
  for (double q : {0.1, 0.5, 0.9, 0.99}) {
    for (int n_max : {0, 3, 40}) {
      long double vac = 0.0L, one = 0.0L;
      const long double x = static_cast<long double>(q) * q;
      for (long n = n_max + 1; n < n_max + 20000; ++n) {
        vac += (1 - x) * std::pow(x, static_cast<long double>(n));
        one += (1 - x) * (1 - x) * std::pow(x, static_cast<long double>(n)) * (n + 1);
      }
      CAPTURE(q);
      CAPTURE(n_max);
      CHECK(std::abs(analytic_tail(SeriesKind::vacuum, q, n_max) - static_cast<double>(vac)) <=
            1e-14 * static_cast<double>(vac) + 1e-300);
      CHECK(std::abs(analytic_tail(SeriesKind::one_particle, q, n_max) - static_cast<double>(one)) <=
            1e-13 * static_cast<double>(one) + 1e-300);
    }
  }
}

TEST_CASE("property: normalization and monotone tails") {
  for (int i = 1; i <= 99; ++i) {
    const double q = i / 100.0;
    const auto p = squeeze_from_q(q);
    for (auto kind : {SeriesKind::vacuum, SeriesKind::one_particle}) {
      const int n_max = min_cutoff_for_tolerance(p, kind, 1e-16);
      const auto s = kind == SeriesKind::vacuum ? vacuum_expansion(p, n_max)
                                                : one_particle_expansion(p, n_max);
      CAPTURE(q);
      CHECK(std::abs(sum_squares(s) + s.tail_bound - 1.0) <= 1e-13);
      const auto half = kind == SeriesKind::vacuum ? vacuum_expansion(p, n_max / 2)
                                                   : one_particle_expansion(p, n_max / 2);
      CHECK(std::abs(sum_squares(half) + half.tail_bound - 1.0) <= 1e-13);
    }
    double prev = 2.0;
    for (int n = 0; n < 60; ++n) {
      const double t = analytic_tail(SeriesKind::one_particle, q, n);
      CHECK(t < prev);
      prev = t;
    }
  }
}

TEST_CASE("one-particle coefficients are vacuum coefficients times sqrt(1-q^2) sqrt(n+1)") {
  for (double q : {0.1, 0.37, 0.8, 0.95}) {
    const auto p = squeeze_from_q(q);
    const auto v = vacuum_expansion(p, 50);
    const auto o = one_particle_expansion(p, 50);
    for (int n = 0; n <= 50; ++n) {
      const double expect = v.coeffs[n] * std::sqrt(p.one_minus_q2()) * std::sqrt(n + 1.0);
      CHECK(std::abs(o.coeffs[n] - expect) <= 1e-15 * std::max(1e-300, std::abs(expect)) + 1e-300);
    }
  }
}

TEST_CASE("min_cutoff_for_tolerance") {
  CHECK(min_cutoff_for_tolerance(squeeze_from_q(0.0), SeriesKind::vacuum, 1e-3) == 0);
  CHECK(min_cutoff_for_tolerance(squeeze_from_q(0.0), SeriesKind::one_particle, 1e-15) == 0);
  CHECK(min_cutoff_for_tolerance(squeeze_from_q(0.5), SeriesKind::vacuum, 1e-12) == 19);

  // Brute-force oracle: scan N upward with the remainder 1 - partial sum.
  const double q = 0.99;
  const long double x = static_cast<long double>(q) * q;
  long double partial = 0.0L;
  int oracle = -1;
  for (int n = 0; n < 100000; ++n) {
    partial += (1 - x) * (1 - x) * std::pow(x, static_cast<long double>(n)) * (n + 1);
    if (1.0L - partial <= 1e-10L) {
      oracle = n;
      break;
    }
  }
  const int got = min_cutoff_for_tolerance(squeeze_from_q(q), SeriesKind::one_particle, 1e-10);
  CHECK(got == oracle);
  CHECK(analytic_tail(SeriesKind::one_particle, q, got) <= 1e-10);
  CHECK(analytic_tail(SeriesKind::one_particle, q, got - 1) > 1e-10);

  int prev = 0;
  for (double tol : {1e-1, 1e-3, 1e-6, 1e-9, 1e-12, 1e-15}) {
    const int n = min_cutoff_for_tolerance(squeeze_from_q(0.7), SeriesKind::one_particle, tol);
    CHECK(n >= prev);
    prev = n;
  }

  CHECK_THROWS_AS(min_cutoff_for_tolerance(squeeze_from_q(0.5), SeriesKind::vacuum, 0.0), DomainError);
  CHECK_THROWS_AS(min_cutoff_for_tolerance(squeeze_from_q(0.5), SeriesKind::vacuum, 1.0), DomainError);
  CHECK_THROWS_AS(min_cutoff_for_tolerance(squeeze_from_q(std::nextafter(1.0, 0.0)),
                                           SeriesKind::vacuum, 1e-12),
                  NumericalRangeError);
}

TEST_CASE("mode labels") {
  const ModeLabel m(1.5, {0.2, -0.3}, Helicity::plus);
  const auto partner = m.partner();
  CHECK(partner.omega() == 1.5);
  CHECK(partner.helicity() == Helicity::plus);
  CHECK(partner.transverse() == TransverseTag{-0.2, 0.3});
  CHECK(partner.partner() == m);
  CHECK_THROWS_AS(ModeLabel(0.0, {}, Helicity::minus), DomainError);
}
