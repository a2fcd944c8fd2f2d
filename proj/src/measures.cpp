#include "rindler/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "rindler/error.hpp"
#include "rindler/series.hpp"
#include "rindler/states.hpp"

namespace rindler::measures {

using fock::BasisVector;
using fock::Entry;

namespace {

constexpr double kNegativeClip = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Upper bound on sum_{n > n_max} h(t_n) for the blocks dropped by truncation.
double dropped_block_entropy(const BlockDensityMatrix& m) {
  if (m.trace_deficit() == 0.0) return 0.0;
  if (!m.family()) return kInf;
  const StateFamily family = *m.family();
  const double q = m.q();
  return series::entropy_tail_bound(
      [&](long n) { return states::family_block_trace(family, q, n); }, m.n_max(), q * q);
}

// Let rho = X + Y with X the truncated operator (trace T) and Y >= 0 the
// dropped tail (trace delta), pushed through a partial trace. Subadditivity
// of Tr f for concave f gives S(X + Y) - S(X) <= S(Y) <= H_tail + delta log2 d;
// concavity of S gives S(X + Y) - S(X) >= h(T + delta) - h(T).
double entropy_bound(double computed_trace, double delta, double dropped_entropy, double log2_dim) {
  if (delta == 0.0) return 0.0;
  const double upper = dropped_entropy + delta * log2_dim;
  const double lower =
      std::abs(series::entropy_term(computed_trace + delta) - series::entropy_term(computed_trace));
  return std::max(upper, lower);
}

std::size_t max_block_dim(const BlockOperator& op) {
  std::size_t d = 1;
  for (const auto& b : op.blocks()) d = std::max(d, b.dim());
  return d;
}

}  // namespace

BlockOperator partial_transpose_alice(const BlockDensityMatrix& m) {
  std::vector<Entry> entries;
  std::vector<std::vector<BasisVector>> groups;
  groups.reserve(m.blocks().size());
  for (const auto& blk : m.blocks()) {
    std::set<fock::AliceLabel> alices;
    std::vector<fock::BobLabel> bobs;
    for (std::size_t i = 0; i < blk.dim(); ++i) {
      const auto& ri = blk.basis[i];
      if (!ri.alice || !ri.bob) throw ContractViolation("partial transpose needs a joint operator");
      alices.insert(*ri.alice);
      if (std::find(bobs.begin(), bobs.end(), *ri.bob) == bobs.end()) bobs.push_back(*ri.bob);
      for (std::size_t j = 0; j < blk.dim(); ++j) {
        const auto& cj = blk.basis[j];
        const double v = blk.matrix(i, j);
        if (i != j && v == 0.0) continue;
        entries.push_back({BasisVector{cj.alice, ri.bob}, BasisVector{ri.alice, cj.bob}, v});
      }
    }
    auto& g = groups.emplace_back();
    for (const auto& b : bobs)
      for (auto a : alices) g.push_back(BasisVector{a, b});
  }
  return fock::assemble_preferring_groups(m.info(), entries, groups);
}

double trace_norm(const BlockOperator& op) {
  series::CompensatedSum s;
  for (const auto& b : op.blocks())
    for (double e : fock::hermitian_eigenvalues(b.matrix)) s += std::abs(e);
  return s.value();
}

double min_eigenvalue(const BlockOperator& op) {
  double lo = kInf;
  for (const auto& b : op.blocks())
    for (double e : fock::hermitian_eigenvalues(b.matrix)) lo = std::min(lo, e);
  return lo;
}

double log_negativity(const BlockDensityMatrix& m) {
  return std::log2(trace_norm(partial_transpose_alice(m)));
}

double von_neumann_entropy(const BlockDensityMatrix& m) {
  series::CompensatedSum s;
  for (const auto& b : m.blocks()) {
    for (double e : fock::hermitian_eigenvalues(b.matrix)) {
      if (e < -kNegativeClip) {
        throw ContractViolation("density matrix is not positive semidefinite: eigenvalue " +
                                std::to_string(e));
      }
      s += series::entropy_term(std::max(e, 0.0));
    }
  }
  return s.value();
}

EntanglementReport mutual_information(const BlockDensityMatrix& m) {
  EntanglementReport r;
  r.family = m.family();
  r.q = m.q();
  r.n_max = m.n_max();
  r.trace_deficit = m.trace_deficit();

  const auto rho_a = fock::partial_trace_bob(m);
  const auto rho_b = fock::partial_trace_alice(m);
  r.S_A = von_neumann_entropy(rho_a);
  r.S_B = von_neumann_entropy(rho_b);
  r.S_AB = von_neumann_entropy(m);
  r.mutual_information = r.S_A + r.S_B - r.S_AB;

  const auto pt = partial_transpose_alice(m);
  const double norm = trace_norm(pt);
  r.log_negativity = std::log2(norm);
  r.min_pt_eigenvalue = min_eigenvalue(pt);

  const double delta = m.trace_deficit();
  const double trace = fock::block_trace(m);
  const double dropped = dropped_block_entropy(m);
  const double log2_dim = std::log2(static_cast<double>(max_block_dim(m)));
  r.bounds.S_AB = entropy_bound(trace, delta, dropped, log2_dim);
  r.bounds.S_A = entropy_bound(trace, delta, dropped, log2_dim);
  r.bounds.S_B = entropy_bound(trace, delta, dropped, log2_dim);
  r.bounds.mutual_information = r.bounds.S_A + r.bounds.S_B + r.bounds.S_AB;

  // |(rho - rho_N)^T|_1 <= d_A Tr(rho - rho_N) for the dropped PSD tail.
  const double pt_shift = static_cast<double>(rho_a.dimension()) * delta;
  if (delta == 0.0) {
    r.bounds.log_negativity = 0.0;
  } else if (norm > pt_shift) {
    r.bounds.log_negativity = pt_shift / (std::numbers::ln2 * (norm - pt_shift));
  } else {
    r.bounds.log_negativity = kInf;
  }

  r.tail_bound_measures = std::max({r.bounds.log_negativity, r.bounds.S_A, r.bounds.S_B,
                                    r.bounds.S_AB, r.bounds.mutual_information});
  return r;
}

}  // namespace rindler::measures
