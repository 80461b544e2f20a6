#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "colorgroups/permutation.h"

namespace colorgroups {

/// A partition of the points into blocks of equal size b with 1 < b < n.
/// Blocks are sorted internally and ordered by their smallest point.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Base-and-strong-generating-set data: level i stabilizes base[0..i-1]
/// and stores the orbit of base[i] with one coset representative per point.
struct StabilizerChain {
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    // transversal[x] is an index into `representatives`, or -1 when x is
    // outside the basic orbit. representatives[t](base) == orbit point.
    std::vector<int> transversal;
    std::vector<Permutation> representatives;
  };
  std::vector<Level> levels;
};

/// Permutation group given by generators. The stabilizer chain is computed
/// at construction; each new level's base point is the smallest point moved
/// by the element that created it. Every query afterwards is read-only.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  /// Identity generators are dropped. Throws std::invalid_argument when
  /// generator degrees disagree with `degree`.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabilizerChain& chain() const { return *chain_; }
  std::vector<Point> base() const;

  const BigInt& order() const { return order_; }
  bool contains(const Permutation& p) const;

  /// Orbit partition of 0..n-1, each orbit sorted, orbits ordered by smallest point.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// The block containing alpha of the finest block system in which alpha
  /// and beta share a block. Computed by union-find closure under generators.
  std::vector<Point> minimal_block(Point alpha, Point beta) const;

  /// Finest invariant partition joining alpha and beta.
  std::vector<std::vector<Point>> minimal_block_partition(Point alpha, Point beta) const;

  /// Distinct nontrivial minimal block systems found with alpha = 0 fixed.
  /// Empty for intransitive groups.
  std::vector<BlockSystem> block_systems() const;

  /// Transitive with no nontrivial block system; false for degree < 2 and
  /// for intransitive groups.
  bool is_primitive() const;

  /// order >= n!/2, i.e. the group has index at most two in S_n.
  bool contains_alternating() const;

  /// Pairwise commutation of generators.
  bool is_abelian() const;

  /// Normal closure of generator commutators.
  PermutationGroup derived_subgroup() const;

  /// Every block maps onto a block under every generator.
  bool preserves(const std::vector<std::vector<Point>>& partition) const;

  /// Uniform element from the stabilizer chain.
  template <class Rng>
  Permutation random_element(Rng& rng) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
  BigInt order_ = 1;
};

/// Flat summary used for reporting and deduplication.
struct Fingerprint {
  std::size_t degree = 0;
  BigInt order = 1;
  bool transitive = false;
  bool primitive = false;
  bool abelian = false;
  std::vector<CycleType> generator_cycle_types;  // sorted
  std::optional<BigInt> derived_order;            // present when order <= 1e5

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint& a, const Fingerprint& b) {
    return std::tie(a.degree, a.order, a.transitive, a.primitive, a.abelian,
                    a.generator_cycle_types, a.derived_order) <=>
           std::tie(b.degree, b.order, b.transitive, b.primitive, b.abelian,
                    b.generator_cycle_types, b.derived_order);
  }
};

Fingerprint fingerprint(const PermutationGroup& group);

/// Converts a non-negative BigInt to uint64, throwing std::overflow_error if it does not fit.
std::uint64_t to_u64(const BigInt& value);

template <class Rng>
Permutation PermutationGroup::random_element(Rng& rng) const {
  Permutation result(degree_);
  for (auto it = chain_->levels.rbegin(); it != chain_->levels.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->orbit.size() - 1);
    Point target = it->orbit[pick(rng)];
    result = it->representatives[static_cast<std::size_t>(it->transversal[target])] * result;
  }
  return result;
}

}  // namespace colorgroups
