// fock.hpp
// Labeled truncated product bases (Alice x Bob) and block-diagonal real
// symmetric operators over them.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rindler/eigen.hpp"

namespace rindler {

enum class StateFamily { helicity_bell, number_bell };

std::string_view to_string(StateFamily f);
// Accepts "helicity", "helicity_bell", "number", "number_bell".
std::optional<StateFamily> parse_family(std::string_view s);

}  // namespace rindler

namespace rindler::fock {

// Alice holds one Minkowski photon: either a helicity qubit {up, down} or a
// number qubit {zero, one}.
enum class AliceLabel : std::uint8_t { up, down, zero, one };

// Helicity of Bob's Rindler tower; `none` for the single-mode number family.
enum class BobHelicity : std::uint8_t { down, up, none };

struct BobLabel {
  BobHelicity helicity = BobHelicity::none;
  int n = 0;  // Rindler occupation number

  friend bool operator==(const BobLabel&, const BobLabel&) = default;
};

// A product basis vector. Reduced operators leave one side empty.
struct BasisVector {
  std::optional<AliceLabel> alice;
  std::optional<BobLabel> bob;

  friend bool operator==(const BasisVector&, const BasisVector&) = default;
  // Orders by Bob occupation, then Bob helicity, then Alice.
  friend std::strong_ordering operator<=>(const BasisVector& a, const BasisVector& b);
};

std::string to_string(const BasisVector& v);

struct Block {
  std::vector<BasisVector> basis;
  Matrix matrix;

  double trace() const { return matrix.trace(); }
  std::size_t dim() const { return basis.size(); }
};

struct Entry {
  BasisVector row;
  BasisVector col;
  double value = 0.0;
};

// Bookkeeping carried alongside the blocks. `trace_deficit` is the analytic
// probability mass of the truncated tail (blocks beyond n_max).
struct OperatorInfo {
  std::optional<StateFamily> family;
  double q = 0.0;
  int n_max = 0;
  double trace_deficit = 0.0;
};

// Real symmetric operator, block diagonal over a labeled basis. Immutable
// after construction.
class BlockOperator {
 public:
  BlockOperator() = default;

  // Throws ContractViolation if a block is not symmetric within 1e-14, if a
  // block's basis and matrix sizes disagree, if a basis vector appears in two
  // blocks, or if the labels mix state families.
  BlockOperator(OperatorInfo info, std::vector<Block> blocks);

  // Builds blocks from loose entries (duplicates are summed). Blocks are the
  // connected components of the coupling graph; each `group` additionally
  // forces its members into one block. Blocks are ordered by their smallest
  // basis vector and each block's basis is sorted.
  static BlockOperator assemble(OperatorInfo info, std::span<const Entry> entries,
                                std::span<const std::vector<BasisVector>> groups = {});

  const OperatorInfo& info() const { return info_; }
  std::optional<StateFamily> family() const { return info_.family; }
  double q() const { return info_.q; }
  int n_max() const { return info_.n_max; }
  double trace_deficit() const { return info_.trace_deficit; }

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t dimension() const { return index_.size(); }

  // Matrix element; zero for vectors outside the support or in different blocks.
  double entry(const BasisVector& row, const BasisVector& col) const;

  // Every stored diagonal entry plus every nonzero off-diagonal entry.
  std::vector<Entry> entries() const;
  std::vector<BasisVector> basis() const;

  BlockOperator scaled(double factor) const;

 private:
  OperatorInfo info_;
  std::vector<Block> blocks_;
  std::map<BasisVector, std::pair<std::size_t, std::size_t>> index_;
};

using BlockDensityMatrix = BlockOperator;

// Blocks built from `entries` grouped by `groups` when the groups are pairwise
// disjoint (one block per group), otherwise by connected components alone.
BlockOperator assemble_preferring_groups(OperatorInfo info, std::span<const Entry> entries,
                                         std::span<const std::vector<BasisVector>> groups);

double block_trace(const BlockOperator& m);

// Alice-only operator: one block over every Alice label present.
BlockOperator partial_trace_bob(const BlockOperator& m);

// Bob-only operator.
BlockOperator partial_trace_alice(const BlockOperator& m);

// max |a_ij - b_ij| over the union of both supports.
double max_abs_difference(const BlockOperator& a, const BlockOperator& b);

}  // namespace rindler::fock
