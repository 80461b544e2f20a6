#pragma once

#include <random>
#include <vector>

#include "colorgroups/indposet.h"
#include "colorgroups/toggles.h"

namespace fixtures {

/// Every labeled dag on exactly m vertices: each vertex pair is absent or
/// oriented either way, keeping the acyclic choices.
std::vector<colorgroups::Dag> all_dags(std::size_t m);

/// Random dag: a random vertex order with each forward edge present with probability p.
colorgroups::Dag random_dag(std::size_t m, double p, std::mt19937_64& rng);

/// `count` random dags on 1..6 vertices whose independent-set count is at most `max_tops`.
std::vector<colorgroups::Dag> random_small_dags(std::size_t count, std::size_t max_tops, std::mt19937_64& rng);

/// Toggle families whose toggle poset is a tree with 3..14 sets: every such
/// family over {1,2,3,4}, plus `grown` random ones
/// over 5 and 6 elements built by attaching one neighboring set at a time.
std::vector<colorgroups::ToggleFamily> tree_toggle_families(std::size_t grown, std::mt19937_64& rng);

/// The Hasse diagram of the toggle poset is connected with |L| - 1 covers.
bool toggle_poset_is_tree(const colorgroups::ToggleFamily& family);

}  // namespace fixtures
