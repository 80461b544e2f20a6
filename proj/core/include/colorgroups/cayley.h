#pragma once

#include <cstddef>
#include <vector>

#include "colorgroups/colored_graph.h"

namespace colorgroups {

struct CayleyColoring {
  EdgeColoredGraph graph;
  std::vector<Permutation> elements;  // vertex i is elements[i]; elements[0] is the identity
};

/// Cayley graph of <generators> with edge {a, a*g_i} colored i+1.
/// Elements are numbered in breadth-first order from the identity.
/// Throws std::invalid_argument when a generator is not a nonidentity
/// involution or repeats, and std::length_error past `cap` elements.
CayleyColoring cayley_coloring(const std::vector<Permutation>& generators,
                               std::size_t cap = 1'000'000);

}  // namespace colorgroups
