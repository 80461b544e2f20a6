#pragma once

#include <cstddef>
#include <vector>

#include "colorgroups/colored_graph.h"
#include "colorgroups/perm_group.h"

namespace colorgroups {

/// Every color-preserving automorphism of g, sorted, identity included.
///
/// Backtracks over the image of one root per connected component. Candidate
/// images must match the root's degree and incident-color multiset; once a
/// vertex's image is fixed, each neighbor is forced to the same-colored
/// neighbor of that image, so a single choice determines the component.
/// Throws std::length_error past `cap` automorphisms.
std::vector<Permutation> colored_automorphism_elements(const EdgeColoredGraph& g,
                                                       std::size_t cap = 1'000'000);

/// Aut_kappa(G) as a permutation group on the vertices.
PermutationGroup colored_automorphisms(const EdgeColoredGraph& g);

/// True iff sigma maps every edge to an edge of the same color.
bool is_colored_automorphism(const EdgeColoredGraph& g, const Permutation& sigma);

}  // namespace colorgroups
