#include "colorgroups/toggles.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "colorgroups/graph_io.h"

namespace colorgroups {
namespace {

bool length_then_lex(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::uint64_t to_mask(const Subset& x) {
  std::uint64_t m = 0;
  for (auto e : x) m |= std::uint64_t{1} << (e - 1);
  return m;
}

}  // namespace

ToggleFamily::ToggleFamily(std::size_t ground_size, std::vector<Subset> sets, std::size_t cap)
    : ground_size_(ground_size) {
  if (ground_size > kMaxGround)
    throw std::invalid_argument("ground set larger than " + std::to_string(kMaxGround));
  if (sets.empty()) throw std::invalid_argument("toggle family must be nonempty");
  for (auto& x : sets) {
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    for (auto e : x)
      if (e < 1 || e > ground_size)
        throw std::invalid_argument("element " + std::to_string(e) + " outside 1.." +
                                    std::to_string(ground_size));
  }
  std::sort(sets.begin(), sets.end(), length_then_lex);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  if (sets.size() > cap)
    throw std::length_error("family has " + std::to_string(sets.size()) + " sets, cap is " +
                            std::to_string(cap));
  sets_ = std::move(sets);
  masks_.reserve(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    masks_.push_back(to_mask(sets_[i]));
    index_.emplace(masks_.back(), i);
  }
}

std::optional<std::size_t> ToggleFamily::index_of_mask(std::uint64_t mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ToggleFamily::index_of(const Subset& x) const {
  Subset sorted = x;
  std::sort(sorted.begin(), sorted.end());
  for (auto e : sorted)
    if (e < 1 || e > ground_size_) return std::nullopt;
  return index_of_mask(to_mask(sorted));
}

ToggleFamily ToggleFamily::power_set(std::size_t ground_size) {
  if (ground_size > 20) throw std::length_error("power set above 2^20 subsets");
  std::vector<Subset> sets;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << ground_size); ++m) {
    Subset x;
    for (std::uint32_t e = 1; e <= ground_size; ++e)
      if (m >> (e - 1) & 1) x.push_back(e);
    sets.push_back(std::move(x));
  }
  return ToggleFamily(ground_size, std::move(sets));
}

Subset toggle(const ToggleFamily& family, std::uint32_t e, const Subset& x) {
  if (e < 1 || e > family.ground_size()) throw std::invalid_argument("toggle element out of range");
  auto index = family.index_of(x);
  if (!index) throw std::invalid_argument("set " + subset_string(x) + " is not in the family");
  auto other = family.index_of_mask(family.mask(*index) ^ (std::uint64_t{1} << (e - 1)));
  return family.set(other ? *other : *index);
}

Permutation toggle_permutation(const ToggleFamily& family, std::uint32_t e) {
  if (e < 1 || e > family.ground_size()) throw std::invalid_argument("toggle element out of range");
  std::vector<Point> images(family.size());
  const std::uint64_t bit = std::uint64_t{1} << (e - 1);
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto other = family.index_of_mask(family.mask(i) ^ bit);
    images[i] = static_cast<Point>(other ? *other : i);
  }
  return Permutation(std::move(images));
}

PermutationGroup toggle_group(const ToggleFamily& family) {
  std::vector<Permutation> gens;
  for (std::uint32_t e = 1; e <= family.ground_size(); ++e) gens.push_back(toggle_permutation(family, e));
  return PermutationGroup(family.size(), std::move(gens));
}

TogglePoset toggle_poset(const ToggleFamily& family) {
  TogglePoset poset{family, {}};
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::uint32_t e = 1; e <= family.ground_size(); ++e) {
      const std::uint64_t bit = std::uint64_t{1} << (e - 1);
      if (family.mask(i) & bit) continue;
      if (auto j = family.index_of_mask(family.mask(i) | bit)) poset.covers.push_back({i, *j, e});
    }
  }
  return poset;
}

EdgeColoredGraph poset_as_coloring(const TogglePoset& poset, std::vector<std::uint32_t>* labels) {
  std::map<std::uint32_t, Color> color_of;
  for (const auto& c : poset.covers) color_of.emplace(c.element, 0);
  Color next = 1;
  for (auto& [label, color] : color_of) color = next++;
  if (labels) {
    labels->clear();
    for (const auto& [label, color] : color_of) labels->push_back(label);
  }
  std::vector<ColoredEdge> edges;
  for (const auto& c : poset.covers)
    edges.push_back({static_cast<Vertex>(c.lower), static_cast<Vertex>(c.upper), color_of[c.element]});
  return EdgeColoredGraph(poset.family.size(), color_of.size(), std::move(edges));
}

std::string subset_string(const Subset& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out + "}";
}

std::string to_dot(const TogglePoset& poset) {
  std::ostringstream out;
  out << "graph toggle_poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.family.size(); ++i)
    out << "  n" << i << " [label=\"" << subset_string(poset.family.set(i)) << "\"];\n";
  for (const auto& c : poset.covers)
    out << "  n" << c.lower << " -- n" << c.upper << " [label=\"" << c.element << "\"];\n";
  out << "}\n";
  return out.str();
}

ToggleFamily parse_family(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> ground;
  std::vector<Subset> sets;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream fields{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    auto number = [&](const std::string& t) {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ParseError(line_no, "expected a non-negative integer, got '" + t + "'");
      return v;
    };
    if (!ground) {
      if (tokens.size() != 1) throw ParseError(line_no, "first line must hold the ground set size");
      ground = number(tokens[0]);
      if (*ground > ToggleFamily::kMaxGround) throw ParseError(line_no, "ground set too large");
      continue;
    }
    Subset x;
    if (!(tokens.size() == 1 && tokens[0] == "-")) {
      for (const auto& t : tokens) {
        auto v = number(t);
        if (v < 1 || v > *ground)
          throw ParseError(line_no, "element " + t + " outside 1.." + std::to_string(*ground));
        x.push_back(static_cast<std::uint32_t>(v));
      }
    }
    sets.push_back(std::move(x));
  }
  if (!ground) throw ParseError(0, "empty input: missing ground set size");
  if (sets.empty()) throw ParseError(0, "family has no sets");
  return ToggleFamily(*ground, std::move(sets));
}

ToggleFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_family(in);
}

ToggleFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_family(in);
}

std::string to_text(const ToggleFamily& family) {
  std::ostringstream out;
  out << family.ground_size() << '\n';
  for (const auto& x : family.sets()) {
    if (x.empty()) {
      out << "-\n";
      continue;
    }
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << x[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace colorgroups
