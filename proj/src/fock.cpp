#include "rindler/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

#include "rindler/error.hpp"

namespace rindler {

std::string_view to_string(StateFamily f) {
  switch (f) {
    case StateFamily::helicity_bell: return "helicity";
    case StateFamily::number_bell: return "number";
  }
  return "?";
}

std::optional<StateFamily> parse_family(std::string_view s) {
  if (s == "helicity" || s == "helicity_bell") return StateFamily::helicity_bell;
  if (s == "number" || s == "number_bell") return StateFamily::number_bell;
  return std::nullopt;
}

}  // namespace rindler

namespace rindler::fock {

namespace {

constexpr double kSymmetryTol = 1e-14;

bool is_helicity(AliceLabel a) { return a == AliceLabel::up || a == AliceLabel::down; }

const char* name(AliceLabel a) {
  switch (a) {
    case AliceLabel::up: return "up";
    case AliceLabel::down: return "down";
    case AliceLabel::zero: return "0";
    case AliceLabel::one: return "1";
  }
  return "?";
}

const char* name(BobHelicity h) {
  switch (h) {
    case BobHelicity::down: return "down";
    case BobHelicity::up: return "up";
    case BobHelicity::none: return "";
  }
  return "?";
}

// Labels of one operator must all come from the same state family.
void check_family(const std::optional<StateFamily>& family, const std::vector<Block>& blocks) {
  std::optional<bool> alice_helicity;
  std::optional<bool> bob_helicity;
  for (const auto& b : blocks) {
    for (const auto& v : b.basis) {
      if (v.alice) {
        const bool h = is_helicity(*v.alice);
        if (alice_helicity && *alice_helicity != h)
          throw ContractViolation("basis mixes helicity and number labels on Alice's side");
        alice_helicity = h;
      }
      if (v.bob) {
        const bool h = v.bob->helicity != BobHelicity::none;
        if (bob_helicity && *bob_helicity != h)
          throw ContractViolation("basis mixes helicity and number labels on Bob's side");
        bob_helicity = h;
        if (v.bob->n < 0) throw ContractViolation("negative Rindler occupation in basis");
      }
    }
  }
  if (!family) return;
  const bool want = *family == StateFamily::helicity_bell;
  if ((alice_helicity && *alice_helicity != want) || (bob_helicity && *bob_helicity != want)) {
    throw ContractViolation("basis labels do not belong to the " +
                            std::string(to_string(*family)) + " family");
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::strong_ordering operator<=>(const BasisVector& a, const BasisVector& b) {
  auto key = [](const BasisVector& v) {
    const int n = v.bob ? v.bob->n : -1;
    const int h = v.bob ? static_cast<int>(v.bob->helicity) : -1;
    const int al = v.alice ? static_cast<int>(*v.alice) : -1;
    return std::tuple{n, h, al};
  };
  return key(a) <=> key(b);
}

std::string to_string(const BasisVector& v) {
  std::string s = "|";
  if (v.alice) s += std::string(name(*v.alice)) + "_A";
  if (v.alice && v.bob) s += ",";
  if (v.bob) {
    s += std::to_string(v.bob->n);
    if (v.bob->helicity != BobHelicity::none) s += std::string(" ") + name(v.bob->helicity);
    s += "_B";
  }
  return s + ">";
}

BlockOperator::BlockOperator(OperatorInfo info, std::vector<Block> blocks)
    : info_(std::move(info)), blocks_(std::move(blocks)) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const Block& blk = blocks_[b];
    if (blk.basis.size() != blk.matrix.size()) {
      throw ContractViolation("block " + std::to_string(b) + ": basis has " +
                              std::to_string(blk.basis.size()) + " vectors but matrix is " +
                              std::to_string(blk.matrix.size()) + "x" +
                              std::to_string(blk.matrix.size()));
    }
    if (blk.matrix.asymmetry() > kSymmetryTol * std::max(1.0, blk.matrix.max_abs())) {
      throw ContractViolation("block " + std::to_string(b) + " is not Hermitian");
    }
    for (std::size_t i = 0; i < blk.basis.size(); ++i) {
      if (!index_.emplace(blk.basis[i], std::pair{b, i}).second) {
        throw ContractViolation("basis vector " + to_string(blk.basis[i]) +
                                " appears more than once");
      }
    }
  }
  check_family(info_.family, blocks_);
}

BlockOperator BlockOperator::assemble(OperatorInfo info, std::span<const Entry> entries,
                                      std::span<const std::vector<BasisVector>> groups) {
  std::map<BasisVector, std::size_t> ids;
  auto id_of = [&](const BasisVector& v) { return ids.emplace(v, ids.size()).first->second; };
  for (const auto& e : entries) {
    id_of(e.row);
    id_of(e.col);
  }
  for (const auto& g : groups)
    for (const auto& v : g) id_of(v);

  DisjointSets sets(ids.size());
  for (const auto& e : entries) sets.unite(ids.at(e.row), ids.at(e.col));
  for (const auto& g : groups)
    for (std::size_t i = 1; i < g.size(); ++i) sets.unite(ids.at(g[0]), ids.at(g[i]));

  // std::map iterates in basis order, so each component's basis comes out
  // sorted and components appear in order of their smallest vector.
  std::map<std::size_t, std::vector<BasisVector>> components;
  std::vector<std::size_t> root_order;
  for (const auto& [v, id] : ids) {
    const std::size_t root = sets.find(id);
    auto [it, inserted] = components.try_emplace(root);
    if (inserted) root_order.push_back(root);
    it->second.push_back(v);
  }

  std::vector<Block> blocks;
  blocks.reserve(root_order.size());
  std::map<BasisVector, std::pair<std::size_t, std::size_t>> where;
  for (std::size_t root : root_order) {
    auto& basis = components.at(root);
    for (std::size_t i = 0; i < basis.size(); ++i) where.emplace(basis[i], std::pair{blocks.size(), i});
    const std::size_t dim = basis.size();
    blocks.push_back({std::move(basis), Matrix(dim)});
  }
  for (const auto& e : entries) {
    const auto [b, i] = where.at(e.row);
    const auto j = where.at(e.col).second;
    blocks[b].matrix(i, j) += e.value;
  }
  return BlockOperator(std::move(info), std::move(blocks));
}

double BlockOperator::entry(const BasisVector& row, const BasisVector& col) const {
  const auto r = index_.find(row);
  const auto c = index_.find(col);
  if (r == index_.end() || c == index_.end()) return 0.0;
  if (r->second.first != c->second.first) return 0.0;
  return blocks_[r->second.first].matrix(r->second.second, c->second.second);
}

std::vector<Entry> BlockOperator::entries() const {
  std::vector<Entry> out;
  for (const auto& blk : blocks_) {
    for (std::size_t i = 0; i < blk.dim(); ++i) {
      for (std::size_t j = 0; j < blk.dim(); ++j) {
        const double v = blk.matrix(i, j);
        if (i == j || v != 0.0) out.push_back({blk.basis[i], blk.basis[j], v});
      }
    }
  }
  return out;
}

std::vector<BasisVector> BlockOperator::basis() const {
  std::vector<BasisVector> out;
  out.reserve(index_.size());
  for (const auto& blk : blocks_) out.insert(out.end(), blk.basis.begin(), blk.basis.end());
  return out;
}

BlockOperator BlockOperator::scaled(double factor) const {
  std::vector<Block> blocks = blocks_;
  for (auto& b : blocks) b.matrix = b.matrix.scaled(factor);
  OperatorInfo info = info_;
  info.trace_deficit *= factor;
  return BlockOperator(std::move(info), std::move(blocks));
}

BlockOperator assemble_preferring_groups(OperatorInfo info, std::span<const Entry> entries,
                                         std::span<const std::vector<BasisVector>> groups) {
  std::set<BasisVector> seen;
  bool disjoint = true;
  for (const auto& g : groups) {
    for (const auto& v : std::set<BasisVector>(g.begin(), g.end())) {
      if (!seen.insert(v).second) {
        disjoint = false;
        break;
      }
    }
    if (!disjoint) break;
  }
  if (disjoint) return BlockOperator::assemble(std::move(info), entries, groups);
  return BlockOperator::assemble(std::move(info), entries);
}

double block_trace(const BlockOperator& m) {
  double t = 0.0;
  for (const auto& b : m.blocks()) t += b.trace();
  return t;
}

BlockOperator partial_trace_bob(const BlockOperator& m) {
  std::vector<Entry> reduced;
  std::set<BasisVector> alice_labels;
  for (const auto& blk : m.blocks()) {
    for (std::size_t i = 0; i < blk.dim(); ++i) {
      const auto& ri = blk.basis[i];
      if (!ri.alice || !ri.bob) throw ContractViolation("partial_trace_bob needs a joint operator");
      alice_labels.insert(BasisVector{ri.alice, std::nullopt});
      for (std::size_t j = 0; j < blk.dim(); ++j) {
        const auto& cj = blk.basis[j];
        if (ri.bob == cj.bob) {
          reduced.push_back({{ri.alice, std::nullopt}, {cj.alice, std::nullopt}, blk.matrix(i, j)});
        }
      }
    }
  }
  const std::vector<std::vector<BasisVector>> groups{
      std::vector<BasisVector>(alice_labels.begin(), alice_labels.end())};
  return BlockOperator::assemble(m.info(), reduced, groups);
}

BlockOperator partial_trace_alice(const BlockOperator& m) {
  std::vector<Entry> reduced;
  std::vector<std::vector<BasisVector>> groups;
  for (const auto& blk : m.blocks()) {
    std::set<BasisVector> bob_labels;
    for (std::size_t i = 0; i < blk.dim(); ++i) {
      const auto& ri = blk.basis[i];
      if (!ri.alice || !ri.bob) throw ContractViolation("partial_trace_alice needs a joint operator");
      bob_labels.insert(BasisVector{std::nullopt, ri.bob});
      for (std::size_t j = 0; j < blk.dim(); ++j) {
        const auto& cj = blk.basis[j];
        if (ri.alice == cj.alice) {
          reduced.push_back({{std::nullopt, ri.bob}, {std::nullopt, cj.bob}, blk.matrix(i, j)});
        }
      }
    }
    groups.emplace_back(bob_labels.begin(), bob_labels.end());
  }
  return assemble_preferring_groups(m.info(), reduced, groups);
}

double max_abs_difference(const BlockOperator& a, const BlockOperator& b) {
  double worst = 0.0;
  for (const auto& e : a.entries()) worst = std::max(worst, std::abs(e.value - b.entry(e.row, e.col)));
  for (const auto& e : b.entries()) worst = std::max(worst, std::abs(e.value - a.entry(e.row, e.col)));
  return worst;
}

}  // namespace rindler::fock
