#include "colorgroups/cayley.h"

#include <stdexcept>
#include <unordered_map>

namespace colorgroups {

CayleyColoring cayley_coloring(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("cayley_coloring needs at least one generator");
  const std::size_t degree = generators.front().degree();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.degree() != degree) throw std::invalid_argument("generator degrees differ");
    if (!g.is_involution())
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " " + g.to_cycle_string() +
                                  " is not a nonidentity involution");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[j] == g)
        throw std::invalid_argument("generator " + std::to_string(i + 1) + " repeats generator " +
                                    std::to_string(j + 1));
  }

  CayleyColoring out;
  std::unordered_map<Permutation, Vertex, PermutationHash> index;
  out.elements.push_back(Permutation(degree));
  index.emplace(out.elements.front(), 0);
  std::vector<ColoredEdge> edges;
  for (std::size_t a = 0; a < out.elements.size(); ++a) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Permutation b = out.elements[a] * generators[i];
      auto [it, inserted] = index.emplace(b, static_cast<Vertex>(out.elements.size()));
      if (inserted) {
        if (out.elements.size() >= cap)
          throw std::length_error("group order exceeds cap of " + std::to_string(cap));
        out.elements.push_back(std::move(b));
      }
      // Each edge is seen from both ends; keep it once.
      if (a < it->second)
        edges.push_back({static_cast<Vertex>(a), it->second, static_cast<Color>(i + 1)});
    }
  }
  out.graph = EdgeColoredGraph(out.elements.size(), generators.size(), std::move(edges));
  return out;
}

}  // namespace colorgroups
