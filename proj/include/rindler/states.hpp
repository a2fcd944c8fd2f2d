// states.hpp
// The two Bell-type states shared by an inertial Alice and an accelerated Bob,
// expressed as Rindler-frame density matrices with Bob's L-wedge partner
// modes traced out.
//
//   helicity: (|1 up>_A |1 down>_B + |1 down>_A |1 up>_B) / sqrt 2
//   number:   (|0>_A |0>_B + |1>_A |1>_B) / sqrt 2
//
// Both are block diagonal in the L-partner occupation n. Spectator Minkowski
// modes are not represented.

#pragma once

#include <compare>
#include <map>
#include <vector>

#include "rindler/bogoliubov.hpp"
#include "rindler/fock.hpp"

namespace rindler::states {

using bogoliubov::SqueezeParams;
using fock::BlockDensityMatrix;

struct BlockWeight {
  int n;
  double lambda;  // (1 - q^2)^2 q^(2n) (n + 1)
};

// lambda_n; sums to 1 over n >= 0.
double helicity_block_weight(double q, long n);
std::vector<BlockWeight> block_weights(const SqueezeParams& p, int n_max);

// Trace of block n of the family's joint density matrix.
double family_block_trace(StateFamily family, double q, long n);

// Exact trace carried by blocks n > n_max.
double family_tail(StateFamily family, double q, int n_max);

// Smallest n_max with family_tail <= tol.
int family_cutoff(StateFamily family, const SqueezeParams& p, double tol);

// Block n is (lambda_n / 2) [[1, 1], [1, 1]] over
// { |up>_A |n+1, down>_B, |down>_A |n+1, up>_B }.
BlockDensityMatrix helicity_bell_rho(const SqueezeParams& p, int n_max);

// Block n over { |0>_A |n>_B, |1>_A |n+1>_B }, obtained by pairing the
// vacuum and one-particle expansion terms that share L occupation n.
BlockDensityMatrix number_bell_rho(const SqueezeParams& p, int n_max);

BlockDensityMatrix joint_density(StateFamily family, const SqueezeParams& p, int n_max);

// Index of a tripartite amplitude: Alice label, R occupation, L occupation.
struct TripartiteKey {
  fock::AliceLabel alice;
  int r;
  int l;
  friend auto operator<=>(const TripartiteKey&, const TripartiteKey&) = default;
};

// Truncated pure state over Alice x R x L with real amplitudes.
struct StateVector {
  StateFamily family;
  double q;
  int n_max;
  std::map<TripartiteKey, double> amplitudes;
  double tail;  // exact norm^2 beyond n_max

  double norm_squared() const;
};

// Only the number family has a single Bob mode; the helicity family throws
// UnsupportedFamilyError.
StateVector tripartite_pure_state(StateFamily family, const SqueezeParams& p, int n_max);

// Brute-force partial trace over L: sums a_i a_j over every pair of
// amplitudes with equal L occupation.
BlockDensityMatrix reduce_over_L(const StateVector& sv);

}  // namespace rindler::states
