#pragma once

// Slow reference computations. They share nothing with the stabilizer
// chain and exist so tests can check the fast paths against them.

#include <cstddef>
#include <vector>

#include "colorgroups/perm_group.h"

namespace colorgroups::oracle {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// Every element of <generators>, found by breadth-first closure, sorted.
/// Throws std::length_error once more than `cap` elements are found.
std::vector<Permutation> brute_force_elements(std::size_t degree,
                                              const std::vector<Permutation>& generators,
                                              std::size_t cap = kDefaultElementCap);

inline std::vector<Permutation> brute_force_elements(const PermutationGroup& group,
                                                     std::size_t cap = kDefaultElementCap) {
  return brute_force_elements(group.degree(), group.generators(), cap);
}

/// Every permutation of degree n, in lexicographic order of image arrays.
std::vector<Permutation> all_permutations(std::size_t degree);

/// Elements of S_n commuting with every generator, sorted. Iterates all n!
/// candidates; throws std::length_error for degree > 8.
std::vector<Permutation> centralizer_elements(const PermutationGroup& group);

/// The centralizer as a group generated by all of its elements.
PermutationGroup centralizer_in_symmetric(const PermutationGroup& group);

/// Every set partition of 0..n-1 (Bell(n) of them) in restricted-growth order.
std::vector<std::vector<std::vector<Point>>> all_set_partitions(std::size_t n);

/// Nontrivial partitions preserved by every generator, by exhaustion.
std::vector<std::vector<std::vector<Point>>> invariant_partitions(const PermutationGroup& group);

}  // namespace colorgroups::oracle
