#include "colorgroups/automorphisms.h"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace colorgroups {
namespace {

constexpr Vertex kUnassigned = ~Vertex{0};

class AutomorphismSearch {
 public:
  AutomorphismSearch(const EdgeColoredGraph& g, std::size_t cap) : g_(g), cap_(cap) {
    const std::size_t n = g.vertex_count();
    profile_.resize(n);
    for (Vertex v = 0; v < n; ++v) profile_[v] = incident_colors(g, v);
    for (const auto& comp : components(g).components) {
      // Breadth-first order from the smallest vertex.
      std::vector<Vertex> order;
      std::vector<bool> seen(n, false);
      std::deque<Vertex> queue{comp.front()};
      seen[comp.front()] = true;
      while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (const auto& [w, c] : g.incident(v))
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
      }
      component_orders_.push_back(std::move(order));
    }
    image_.assign(n, kUnassigned);
    used_.assign(n, false);
  }

  std::vector<Permutation> run() {
    extend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void extend(std::size_t component) {
    if (component == component_orders_.size()) {
      found_.emplace_back(image_);
      if (found_.size() > cap_)
        throw std::length_error("automorphism count exceeded cap of " + std::to_string(cap_));
      return;
    }
    const auto& order = component_orders_[component];
    const Vertex root = order.front();
    for (Vertex target = 0; target < g_.vertex_count(); ++target) {
      if (used_[target] || profile_[target] != profile_[root]) continue;
      std::vector<Vertex> assigned;
      if (propagate(order, root, target, assigned)) extend(component + 1);
      for (Vertex v : assigned) {
        used_[image_[v]] = false;
        image_[v] = kUnassigned;
      }
    }
  }

  bool assign(Vertex v, Vertex target, std::vector<Vertex>& assigned) {
    if (image_[v] != kUnassigned) return image_[v] == target;
    if (used_[target] || profile_[target] != profile_[v]) return false;
    image_[v] = target;
    used_[target] = true;
    assigned.push_back(v);
    return true;
  }

  // An automorphism fixing the image of v fixes the images of all
  // neighbors of v, since each color appears at most once at a vertex.
  bool propagate(const std::vector<Vertex>& order, Vertex root, Vertex target,
                 std::vector<Vertex>& assigned) {
    if (!assign(root, target, assigned)) return false;
    for (Vertex v : order) {
      for (const auto& [w, c] : g_.incident(v)) {
        auto forced = g_.neighbor_by_color(image_[v], c);
        if (!forced || !assign(w, *forced, assigned)) return false;
      }
    }
    return true;
  }

  const EdgeColoredGraph& g_;
  std::size_t cap_;
  std::vector<std::vector<Color>> profile_;
  std::vector<std::vector<Vertex>> component_orders_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> colored_automorphism_elements(const EdgeColoredGraph& g,
                                                       std::size_t cap) {
  if (g.vertex_count() == 0) return {Permutation(0)};
  return AutomorphismSearch(g, cap).run();
}

PermutationGroup colored_automorphisms(const EdgeColoredGraph& g) {
  return PermutationGroup(g.vertex_count(), colored_automorphism_elements(g));
}

bool is_colored_automorphism(const EdgeColoredGraph& g, const Permutation& sigma) {
  if (sigma.degree() != g.vertex_count()) return false;
  std::set<std::tuple<Vertex, Vertex, Color>> edges;
  for (const auto& e : g.edges()) edges.emplace(std::min(e.u, e.v), std::max(e.u, e.v), e.color);
  for (const auto& e : g.edges()) {
    Vertex a = sigma(e.u), b = sigma(e.v);
    if (!edges.count({std::min(a, b), std::max(a, b), e.color})) return false;
  }
  return true;
}

}  // namespace colorgroups
