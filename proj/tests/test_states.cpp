#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rindler/bogoliubov.hpp"
#include "rindler/error.hpp"
#include "rindler/fock.hpp"
#include "rindler/states.hpp"

using namespace rindler;
using namespace rindler::fock;
using namespace rindler::states;
using bogoliubov::squeeze_from_q;

namespace {

BasisVector num(AliceLabel a, int n) { return {a, BobLabel{BobHelicity::none, n}}; }

}  // namespace

TEST_CASE("helicity_bell_rho") {
  const auto pure = helicity_bell_rho(squeeze_from_q(0.0), 5);
  REQUIRE(pure.blocks().size() == 1);
  CHECK(pure.blocks()[0].matrix == Matrix{{0.5, 0.5}, {0.5, 0.5}});
  CHECK(pure.trace_deficit() == 0.0);

  const auto rho = helicity_bell_rho(squeeze_from_q(0.5), 20);
  const auto& b0 = rho.blocks()[0];
  CHECK(b0.basis[0] == BasisVector{AliceLabel::up, BobLabel{BobHelicity::down, 1}});
  CHECK(b0.basis[1] == BasisVector{AliceLabel::down, BobLabel{BobHelicity::up, 1}});
  CHECK(b0.matrix == Matrix{{9.0 / 32, 9.0 / 32}, {9.0 / 32, 9.0 / 32}});

  for (const auto& b : rho.blocks()) {
    const auto ev = hermitian_eigenvalues(b.matrix);
    CHECK(std::abs(ev[0] - b.trace()) <= 1e-16);
    CHECK(std::abs(ev[1]) <= 1e-14);
  }
}

TEST_CASE("block weights sum to one") {
  for (double q : {0.1, 0.5, 0.9, 0.99}) {
    const auto p = squeeze_from_q(q);
    double prev = 0.0;
    for (int n_max : {0, 10, 100, family_cutoff(StateFamily::helicity_bell, p, 1e-14)}) {
      double s = 0.0;
      for (const auto& w : block_weights(p, n_max)) s += w.lambda;
      CAPTURE(q);
      CAPTURE(n_max);
      CHECK(s - prev >= -1e-13);
      prev = s;
      CHECK(std::abs(s + family_tail(StateFamily::helicity_bell, q, n_max) - 1.0) <= 1e-13);
    }
  }
}

TEST_CASE("number_bell_rho") {
  const auto pure = number_bell_rho(squeeze_from_q(0.0), 4);
  REQUIRE(pure.blocks().size() == 1);
  CHECK(pure.blocks()[0].basis == std::vector<BasisVector>{num(AliceLabel::zero, 0), num(AliceLabel::one, 1)});
  CHECK(pure.blocks()[0].matrix == Matrix{{0.5, 0.5}, {0.5, 0.5}});

  const auto rho = number_bell_rho(squeeze_from_q(0.5), 10);
  CHECK(std::abs(rho.entry(num(AliceLabel::zero, 0), num(AliceLabel::zero, 0)) - 3.0 / 8) <= 1e-16);
  CHECK(std::abs(rho.entry(num(AliceLabel::one, 1), num(AliceLabel::one, 1)) - 9.0 / 32) <= 1e-16);
  CHECK(std::abs(rho.entry(num(AliceLabel::zero, 0), num(AliceLabel::one, 1)) - std::pow(0.75, 1.5) / 2) <=
        1e-16);

  const auto p = squeeze_from_q(0.9);
  const auto big = number_bell_rho(p, family_cutoff(StateFamily::number_bell, p, 1e-12));
  CHECK(big.trace_deficit() <= 1e-12);
  CHECK(std::abs(block_trace(big) + big.trace_deficit() - 1.0) <= 1e-13);
}

TEST_CASE("tripartite_pure_state") {
  const auto sv0 = tripartite_pure_state(StateFamily::number_bell, squeeze_from_q(0.0), 5);
  REQUIRE(sv0.amplitudes.size() == 2);
  CHECK(sv0.amplitudes.at({AliceLabel::zero, 0, 0}) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sv0.amplitudes.at({AliceLabel::one, 1, 0}) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));

  const auto sv = tripartite_pure_state(StateFamily::number_bell, squeeze_from_q(0.7), 120);
  CHECK(std::abs(sv.norm_squared() + sv.tail - 1.0) <= 1e-13);

  for (double q : {0.2, 0.6, 0.95}) {
    const auto s = tripartite_pure_state(StateFamily::number_bell, squeeze_from_q(q), 3);
    const double ratio = s.amplitudes.at({AliceLabel::one, 1, 0}) / s.amplitudes.at({AliceLabel::zero, 0, 0});
    CHECK(std::abs(ratio - std::sqrt(1 - q * q)) <= 1e-15);
  }

  CHECK_THROWS_AS(tripartite_pure_state(StateFamily::helicity_bell, squeeze_from_q(0.5), 3),
                  UnsupportedFamilyError);
}

TEST_CASE("reduce_over_L reproduces number_bell_rho") {
  const auto inertial = reduce_over_L(tripartite_pure_state(StateFamily::number_bell, squeeze_from_q(0.0), 4));
  CHECK(max_abs_difference(inertial, number_bell_rho(squeeze_from_q(0.0), 4)) <= 1e-15);

  for (double q : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const auto p = squeeze_from_q(q);
    const auto sv = tripartite_pure_state(StateFamily::number_bell, p, 30);
    const auto reduced = reduce_over_L(sv);
    const auto direct = number_bell_rho(p, 30);
    CAPTURE(q);
    CHECK(max_abs_difference(reduced, direct) <= 1e-12);
    CHECK(reduced.blocks().size() == direct.blocks().size());
    CHECK(std::abs(block_trace(reduced) - sv.norm_squared()) <= 1e-14);
    CHECK(reduced.trace_deficit() == direct.trace_deficit());
  }
}

TEST_CASE("both families approach the Bell matrix as q -> 0") {
  double prev_h = 1.0, prev_n = 1.0;
  for (double q : {0.3, 0.1, 0.03, 0.01, 0.001}) {
    const auto p = squeeze_from_q(q);
    const auto h = helicity_bell_rho(p, 40);
    const auto n = number_bell_rho(p, 40);
    const double dh = max_abs_difference(h, helicity_bell_rho(squeeze_from_q(0.0), 0));
    const double dn = max_abs_difference(n, number_bell_rho(squeeze_from_q(0.0), 0));
    CHECK(dh < prev_h);
    CHECK(dn < prev_n);
    prev_h = dh;
    prev_n = dn;
  }
  CHECK(prev_h < 1e-5);
  CHECK(prev_n < 1e-5);
}
