#include "rindler/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rindler/error.hpp"
#include "rindler/series.hpp"

namespace rindler::states {

using bogoliubov::SeriesKind;
using fock::AliceLabel;
using fock::BasisVector;
using fock::Block;
using fock::BobHelicity;
using fock::BobLabel;
using fock::Matrix;

namespace {

void require_order(int n_max) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
}

// Blocks past n = 0 vanish identically in the inertial limit.
int populated_blocks(double q, int n_max) { return q == 0.0 ? 0 : n_max; }

}  // namespace

double helicity_block_weight(double q, long n) {
  const double d = (1.0 - q) * (1.0 + q);
  return d * d * std::pow(q * q, static_cast<double>(n)) * (static_cast<double>(n) + 1.0);
}

std::vector<BlockWeight> block_weights(const SqueezeParams& p, int n_max) {
  require_order(n_max);
  std::vector<BlockWeight> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back({n, helicity_block_weight(p.q, n)});
  return out;
}

double family_block_trace(StateFamily family, double q, long n) {
  if (family == StateFamily::helicity_bell) return helicity_block_weight(q, n);
  const double d = (1.0 - q) * (1.0 + q);
  const double xn = std::pow(q * q, static_cast<double>(n));
  return 0.5 * d * xn * (1.0 + d * (static_cast<double>(n) + 1.0));
}

double family_tail(StateFamily family, double q, int n_max) {
  const double one = bogoliubov::analytic_tail(SeriesKind::one_particle, q, n_max);
  if (family == StateFamily::helicity_bell) return one;
  return 0.5 * (bogoliubov::analytic_tail(SeriesKind::vacuum, q, n_max) + one);
}

int family_cutoff(StateFamily family, const SqueezeParams& p, double tol) {
  const int one = bogoliubov::min_cutoff_for_tolerance(p, SeriesKind::one_particle, tol);
  if (family == StateFamily::helicity_bell) return one;
  // Each half of the number state carries weight 1/2, so both tails <= tol
  // puts their average below tol as well.
  return std::max(one, bogoliubov::min_cutoff_for_tolerance(p, SeriesKind::vacuum, tol));
}

BlockDensityMatrix helicity_bell_rho(const SqueezeParams& p, int n_max) {
  require_order(n_max);
  const int last = populated_blocks(p.q, n_max);
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(last) + 1);
  for (int n = 0; n <= last; ++n) {
    const double half = 0.5 * helicity_block_weight(p.q, n);
    Block b{{BasisVector{AliceLabel::up, BobLabel{BobHelicity::down, n + 1}},
             BasisVector{AliceLabel::down, BobLabel{BobHelicity::up, n + 1}}},
            Matrix{{half, half}, {half, half}}};
    blocks.push_back(std::move(b));
  }
  fock::OperatorInfo info{StateFamily::helicity_bell, p.q, n_max,
                          family_tail(StateFamily::helicity_bell, p.q, n_max)};
  return BlockDensityMatrix(std::move(info), std::move(blocks));
}

BlockDensityMatrix number_bell_rho(const SqueezeParams& p, int n_max) {
  require_order(n_max);
  const auto vac = bogoliubov::vacuum_expansion(p, n_max);
  const auto one = bogoliubov::one_particle_expansion(p, n_max);
  const int last = populated_blocks(p.q, n_max);

  // Alice |0> pairs with B's vacuum expansion, Alice |1> with the
  // one-particle expansion. For L occupation n these leave R in |n> and
  // |n+1> respectively, each with amplitude coeff / sqrt 2.
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(last) + 1);
  for (int n = 0; n <= last; ++n) {
    const double a0 = vac.coeffs[n];
    const double a1 = one.coeffs[n];
    Block b{{BasisVector{AliceLabel::zero, BobLabel{BobHelicity::none, n}},
             BasisVector{AliceLabel::one, BobLabel{BobHelicity::none, n + 1}}},
            Matrix{{0.5 * a0 * a0, 0.5 * a0 * a1}, {0.5 * a1 * a0, 0.5 * a1 * a1}}};
    blocks.push_back(std::move(b));
  }
  fock::OperatorInfo info{StateFamily::number_bell, p.q, n_max,
                          family_tail(StateFamily::number_bell, p.q, n_max)};
  return BlockDensityMatrix(std::move(info), std::move(blocks));
}

BlockDensityMatrix joint_density(StateFamily family, const SqueezeParams& p, int n_max) {
  return family == StateFamily::helicity_bell ? helicity_bell_rho(p, n_max)
                                              : number_bell_rho(p, n_max);
}

double StateVector::norm_squared() const {
  series::CompensatedSum s;
  for (const auto& [key, a] : amplitudes) s += a * a;
  return s.value();
}

StateVector tripartite_pure_state(StateFamily family, const SqueezeParams& p, int n_max) {
  if (family != StateFamily::number_bell) {
    throw UnsupportedFamilyError(
        "tripartite state is only defined for the number family (one Bob mode)");
  }
  require_order(n_max);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const auto vac = bogoliubov::vacuum_expansion(p, n_max);
  const auto one = bogoliubov::one_particle_expansion(p, n_max);

  StateVector sv{family, p.q, n_max, {}, family_tail(family, p.q, n_max)};
  for (int n = 0; n <= n_max; ++n) {
    if (vac.coeffs[n] != 0.0) sv.amplitudes[{AliceLabel::zero, n, n}] = vac.coeffs[n] * inv_sqrt2;
    if (one.coeffs[n] != 0.0) sv.amplitudes[{AliceLabel::one, n + 1, n}] = one.coeffs[n] * inv_sqrt2;
  }
  return sv;
}

BlockDensityMatrix reduce_over_L(const StateVector& sv) {
  std::map<int, std::vector<std::pair<TripartiteKey, double>>> by_l;
  for (const auto& [key, a] : sv.amplitudes) by_l[key.l].emplace_back(key, a);

  auto bob = [](int r) { return BobLabel{BobHelicity::none, r}; };
  std::vector<fock::Entry> entries;
  for (const auto& [l, terms] : by_l) {
    for (const auto& [ki, ai] : terms) {
      for (const auto& [kj, aj] : terms) {
        entries.push_back({BasisVector{ki.alice, bob(ki.r)}, BasisVector{kj.alice, bob(kj.r)}, ai * aj});
      }
    }
  }
  fock::OperatorInfo info{sv.family, sv.q, sv.n_max, sv.tail};
  return BlockDensityMatrix::assemble(std::move(info), entries);
}

}  // namespace rindler::states
