#include "colorgroups/oracles.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace colorgroups::oracle {

std::vector<Permutation> brute_force_elements(std::size_t degree,
                                              const std::vector<Permutation>& generators,
                                              std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw std::length_error("element closure exceeded cap of " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> centralizer_elements(const PermutationGroup& group) {
  if (group.degree() > 8)
    throw std::length_error("brute-force centralizer is limited to degree 8");
  std::vector<Permutation> out;
  for (auto& candidate : all_permutations(group.degree())) {
    bool commutes = std::all_of(group.generators().begin(), group.generators().end(),
                                [&](const Permutation& g) { return commute(candidate, g); });
    if (commutes) out.push_back(std::move(candidate));
  }
  return out;
}

PermutationGroup centralizer_in_symmetric(const PermutationGroup& group) {
  return PermutationGroup(group.degree(), centralizer_elements(group));
}

std::vector<std::vector<std::vector<Point>>> all_set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<Point>>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  for (;;) {
    std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<Point>> partition(blocks);
    for (std::size_t i = 0; i < n; ++i) partition[rgs[i]].push_back(static_cast<Point>(i));
    out.push_back(std::move(partition));
    // Next restricted growth string.
    std::size_t i = n - 1;
    while (i > 0) {
      std::size_t limit = prefix_max[i - 1] + 1;
      if (rgs[i] < limit) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  return out;
}

std::vector<std::vector<std::vector<Point>>> invariant_partitions(const PermutationGroup& group) {
  std::vector<std::vector<std::vector<Point>>> out;
  const std::size_t n = group.degree();
  for (auto& partition : all_set_partitions(n)) {
    if (partition.size() == 1 || partition.size() == n) continue;
    std::vector<std::size_t> block_of(n);
    for (std::size_t b = 0; b < partition.size(); ++b)
      for (Point x : partition[b]) block_of[x] = b;
    bool ok = true;
    for (const auto& g : group.generators()) {
      for (const auto& block : partition) {
        std::vector<Point> image;
        for (Point x : block) image.push_back(g(x));
        std::sort(image.begin(), image.end());
        if (image != partition[block_of[image.front()]]) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(partition));
  }
  return out;
}

}  // namespace colorgroups::oracle
