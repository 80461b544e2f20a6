#include "colorgroups/perm_group.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace colorgroups {
namespace {

// Deterministic Schreier-Sims. A new strong generator is stored on every
// level from the one where it was found down to the first level whose base
// point it moves, so level i generates the stabilizer of base[0..i-1].
class ChainBuilder {
 public:
  explicit ChainBuilder(std::size_t degree) : degree_(degree) {}

  void add_group_generator(const Permutation& g) {
    auto [residue, depth] = sift(g, 0);
    if (residue.is_identity()) return;
    install(residue, 0, depth);
  }

  StabilizerChain release() { return std::move(chain_); }

 private:
  using Level = StabilizerChain::Level;

  // Strips g through levels from `start`. Returns the residue and the level
  // at which stripping stopped (levels.size() when it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const {
    for (std::size_t i = start; i < chain_.levels.size(); ++i) {
      const Level& level = chain_.levels[i];
      Point image = g(level.base);
      int t = level.transversal[image];
      if (t < 0) return {std::move(g), i};
      g = level.representatives[static_cast<std::size_t>(t)].inverse() * g;
    }
    return {std::move(g), chain_.levels.size()};
  }

  // Adds a non-identity element h of G^(from) that fixes base[from..depth-1]
  // to levels from..depth, creating level `depth` if needed.
  void install(const Permutation& h, std::size_t from, std::size_t depth) {
    if (depth == chain_.levels.size()) {
      Level level;
      level.base = static_cast<Point>(h.first_moved_point());
      level.transversal.assign(degree_, -1);
      level.transversal[level.base] = 0;
      level.orbit.push_back(level.base);
      level.representatives.push_back(Permutation(degree_));
      chain_.levels.push_back(std::move(level));
    }
    for (std::size_t i = depth + 1; i-- > from;) {
      chain_.levels[i].generators.push_back(h);
      extend_orbit(i);
    }
    // Deepest first so that the chain below level i is complete before
    // Schreier generators of level i are sifted through it.
    for (std::size_t i = depth + 1; i-- > from;) close_level(i);
  }

  void extend_orbit(std::size_t i) {
    Level& level = chain_.levels[i];
    std::deque<Point> queue(level.orbit.begin(), level.orbit.end());
    while (!queue.empty()) {
      Point x = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < level.generators.size(); ++s) {
        Point y = level.generators[s](x);
        if (level.transversal[y] >= 0) continue;
        level.transversal[y] = static_cast<int>(level.representatives.size());
        level.representatives.push_back(
            level.generators[s] *
            level.representatives[static_cast<std::size_t>(level.transversal[x])]);
        level.orbit.push_back(y);
        queue.push_back(y);
      }
    }
  }

  // Ensures every Schreier generator of level i lies in the chain below it.
  // Installing residues only touches deeper levels, so the orbit and
  // generators of level i stay fixed during the scan; `levels` may still
  // reallocate, hence the re-lookup each iteration.
  void close_level(std::size_t i) {
    const std::size_t orbit_size = chain_.levels[i].orbit.size();
    const std::size_t gen_count = chain_.levels[i].generators.size();
    for (std::size_t o = 0; o < orbit_size; ++o) {
      for (std::size_t s = 0; s < gen_count; ++s) {
        const Level& level = chain_.levels[i];
        Point x = level.orbit[o];
        const Permutation& gen = level.generators[s];
        const Permutation& ux =
            level.representatives[static_cast<std::size_t>(level.transversal[x])];
        const Permutation& uy =
            level.representatives[static_cast<std::size_t>(level.transversal[gen(x)])];
        Permutation schreier = uy.inverse() * gen * ux;
        if (schreier.is_identity()) continue;
        auto [residue, depth] = sift(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        install(residue, i + 1, depth);
      }
    }
  }

  std::size_t degree_;
  StabilizerChain chain_;
};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

std::vector<std::vector<Point>> normalize_partition(std::vector<std::vector<Point>> parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " differs from group degree " + std::to_string(degree));
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  ChainBuilder builder(degree_);
  for (const auto& g : generators_) builder.add_group_generator(g);
  auto chain = std::make_shared<StabilizerChain>(builder.release());
  order_ = 1;
  for (const auto& level : chain->levels) order_ *= level.orbit.size();
  chain_ = std::move(chain);
}

std::vector<Point> PermutationGroup::base() const {
  std::vector<Point> out;
  for (const auto& level : chain_->levels) out.push_back(level.base);
  return out;
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Permutation g = p;
  for (const auto& level : chain_->levels) {
    int t = level.transversal[g(level.base)];
    if (t < 0) return false;
    g = level.representatives[static_cast<std::size_t>(t)].inverse() * g;
  }
  return g.is_identity();
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const {
  UnionFind uf(degree_);
  for (const auto& g : generators_)
    for (std::size_t x = 0; x < degree_; ++x) uf.unite(x, g(static_cast<Point>(x)));
  std::vector<std::vector<Point>> by_root(degree_);
  for (std::size_t x = 0; x < degree_; ++x) by_root[uf.find(x)].push_back(static_cast<Point>(x));
  std::vector<std::vector<Point>> out;
  for (auto& orbit : by_root)
    if (!orbit.empty()) out.push_back(std::move(orbit));
  return out;
}

bool PermutationGroup::is_transitive() const { return degree_ > 0 && orbits().size() == 1; }

std::vector<std::vector<Point>> PermutationGroup::minimal_block_partition(Point alpha,
                                                                          Point beta) const {
  if (alpha >= degree_ || beta >= degree_) throw std::out_of_range("point out of range");
  UnionFind uf(degree_);
  std::deque<std::pair<Point, Point>> pending;
  if (uf.unite(alpha, beta)) pending.emplace_back(alpha, beta);
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    for (const auto& g : generators_) {
      Point ga = g(a), gb = g(b);
      if (uf.unite(ga, gb)) pending.emplace_back(ga, gb);
    }
  }
  std::vector<std::vector<Point>> by_root(degree_);
  for (std::size_t x = 0; x < degree_; ++x) by_root[uf.find(x)].push_back(static_cast<Point>(x));
  std::vector<std::vector<Point>> out;
  for (auto& block : by_root)
    if (!block.empty()) out.push_back(std::move(block));
  return normalize_partition(std::move(out));
}

std::vector<Point> PermutationGroup::minimal_block(Point alpha, Point beta) const {
  for (auto& block : minimal_block_partition(alpha, beta))
    if (std::binary_search(block.begin(), block.end(), alpha)) return block;
  return {alpha};
}

std::vector<BlockSystem> PermutationGroup::block_systems() const {
  std::vector<BlockSystem> out;
  if (!is_transitive() || degree_ < 3) return out;
  std::set<std::vector<std::vector<Point>>> seen;
  for (Point beta = 1; beta < degree_; ++beta) {
    auto partition = minimal_block_partition(0, beta);
    if (partition.size() == 1) continue;
    if (seen.insert(partition).second) out.push_back(BlockSystem{std::move(partition)});
  }
  return out;
}

bool PermutationGroup::is_primitive() const {
  if (degree_ < 2 || !is_transitive()) return false;
  for (Point beta = 1; beta < degree_; ++beta)
    if (minimal_block_partition(0, beta).size() != 1) return false;
  return true;
}

bool PermutationGroup::contains_alternating() const {
  return order_ * 2 >= factorial(degree_);
}

bool PermutationGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!commute(generators_[i], generators_[j])) return false;
  return true;
}

PermutationGroup PermutationGroup::derived_subgroup() const {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      const auto& a = generators_[i];
      const auto& b = generators_[j];
      Permutation c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) gens.push_back(std::move(c));
    }
  PermutationGroup current(degree_, gens);
  // Normal closure: add conjugates by the generators until stable.
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = current.generators();
    for (const auto& h : snapshot) {
      for (const auto& g : generators_) {
        Permutation conj = g.inverse() * h * g;
        if (!current.contains(conj)) {
          gens.push_back(std::move(conj));
          current = PermutationGroup(degree_, gens);
          grew = true;
        }
      }
    }
  }
  return current;
}

bool PermutationGroup::preserves(const std::vector<std::vector<Point>>& partition) const {
  std::vector<std::size_t> block_of(degree_, partition.size());
  for (std::size_t b = 0; b < partition.size(); ++b)
    for (Point x : partition[b]) {
      if (x >= degree_ || block_of[x] != partition.size()) return false;
      block_of[x] = b;
    }
  for (std::size_t x = 0; x < degree_; ++x)
    if (block_of[x] == partition.size()) return false;
  for (const auto& g : generators_) {
    for (const auto& block : partition) {
      std::size_t target = block_of[g(block.front())];
      for (Point x : block)
        if (block_of[g(x)] != target) return false;
      if (partition[target].size() != block.size()) return false;
    }
  }
  return true;
}

Fingerprint fingerprint(const PermutationGroup& group) {
  Fingerprint fp;
  fp.degree = group.degree();
  fp.order = group.order();
  fp.transitive = group.is_transitive();
  fp.primitive = group.is_primitive();
  fp.abelian = group.is_abelian();
  for (const auto& g : group.generators()) fp.generator_cycle_types.push_back(g.cycle_type());
  std::sort(fp.generator_cycle_types.begin(), fp.generator_cycle_types.end());
  if (group.order() <= 100000) fp.derived_order = group.derived_subgroup().order();
  return fp;
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("integer does not fit in 64 bits");
  return value.convert_to<std::uint64_t>();
}

}  // namespace colorgroups
