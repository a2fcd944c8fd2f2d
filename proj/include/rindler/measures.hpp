// measures.hpp
// Entanglement and correlation measures on block density matrices. All
// logarithms are base 2, so every quantity is in bits.

#pragma once

#include <optional>

#include "rindler/fock.hpp"

namespace rindler::measures {

using fock::BlockDensityMatrix;
using fock::BlockOperator;

// Upper bounds on |exact - computed| caused by truncating Bob's Fock tower.
struct TruncationBounds {
  double log_negativity = 0.0;
  double S_A = 0.0;
  double S_B = 0.0;
  double S_AB = 0.0;
  double mutual_information = 0.0;
};

struct EntanglementReport {
  std::optional<StateFamily> family;
  double q = 0.0;
  int n_max = 0;
  double log_negativity = 0.0;
  double S_A = 0.0;
  double S_B = 0.0;
  double S_AB = 0.0;
  double mutual_information = 0.0;  // S_A + S_B - S_AB
  double min_pt_eigenvalue = 0.0;
  double trace_deficit = 0.0;
  TruncationBounds bounds;
  double tail_bound_measures = 0.0;  // largest entry of `bounds`
};

// Transposes Alice's index inside every block. When the per-block product
// spaces (Alice labels x Bob labels of each input block) are disjoint they
// become the output blocks; otherwise the output is blocked by connectivity.
BlockOperator partial_transpose_alice(const BlockDensityMatrix& m);

// Sum of |eigenvalue| over all blocks.
double trace_norm(const BlockOperator& op);

double min_eigenvalue(const BlockOperator& op);

// log2 of the trace norm of the partial transpose.
double log_negativity(const BlockDensityMatrix& m);

// -Tr rho log2 rho with 0 log 0 = 0. Eigenvalues in [-1e-12, 0) are clipped
// to zero; anything more negative throws ContractViolation.
double von_neumann_entropy(const BlockDensityMatrix& m);

// Entropies of both marginals and the joint state, log-negativity, the most
// negative partial-transpose eigenvalue and truncation bounds.
EntanglementReport mutual_information(const BlockDensityMatrix& m);

}  // namespace rindler::measures
