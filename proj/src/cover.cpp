#include "icode/cover.hpp"

#include <algorithm>
#include <limits>

namespace icode {

namespace {

// DSATUR branch and bound over a single graph.
class ColouringSearch {
public:
  explicit ColouringSearch(const DerivedGraph &g)
      : g_(g), n_(g.vertex_count()), colour_(n_, unset),
        neighbour_colours_(n_, std::vector<int>(n_ + 1, 0)), saturation_(n_, 0),
        degree_(n_) {
    for (std::size_t v = 0; v < n_; ++v)
      degree_[v] = g.neighbors(v).count();
  }

  Colouring run() {
    if (n_ == 0)
      return {};
    seed_upper_bound();
    lower_bound_ = clique_lower_bound();
    if (lower_bound_ < best_count_)
      branch(0, 0);
    return renumbered(best_);
  }

private:
  static constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();

  void seed_upper_bound() {
    // First-fit in ascending order; equals greedy_cover on the complement.
    std::vector<VertexSet> classes;
    best_.assign(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      std::size_t c = 0;
      while (c < classes.size() && classes[c].intersects(g_.neighbors(v)))
        ++c;
      if (c == classes.size())
        classes.emplace_back(n_);
      classes[c].set(v);
      best_[v] = c;
    }
    best_count_ = classes.size();
  }

  // Greedy maximal clique grown from each vertex; best size wins.
  std::size_t clique_lower_bound() const {
    std::size_t best = 1;
    for (std::size_t start = 0; start < n_; ++start) {
      VertexSet candidates = g_.neighbors(start);
      std::size_t size = 1;
      while (candidates.any()) {
        std::size_t pick = VertexSet::npos, pick_degree = 0;
        for (auto v = candidates.find_first(); v != VertexSet::npos;
             v = candidates.find_next(v)) {
          const auto d = (g_.neighbors(v) & candidates).count();
          if (pick == VertexSet::npos || d > pick_degree) {
            pick = v;
            pick_degree = d;
          }
        }
        candidates &= g_.neighbors(pick);
        ++size;
      }
      best = std::max(best, size);
    }
    return best;
  }

  std::size_t select_vertex() const {
    std::size_t pick = unset;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour_[v] != unset)
        continue;
      if (pick == unset || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && degree_[v] > degree_[pick]))
        pick = v;
    }
    return pick;
  }

  void assign(std::size_t v, std::size_t c, int delta) {
    const auto &nb = g_.neighbors(v);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
      auto &count = neighbour_colours_[u][c];
      if (delta > 0 && count++ == 0)
        ++saturation_[u];
      else if (delta < 0 && --count == 0)
        --saturation_[u];
      if (colour_[u] == unset) {
        if (delta > 0)
          --degree_[u];
        else
          ++degree_[u];
      }
    }
    colour_[v] = delta > 0 ? c : unset;
  }

  void branch(std::size_t coloured, std::size_t used) {
    if (best_count_ <= lower_bound_)
      return;
    if (coloured == n_) {
      best_ = colour_;
      best_count_ = used;
      return;
    }
    const auto v = select_vertex();
    for (std::size_t c = 0; c < used; ++c) {
      if (neighbour_colours_[v][c] != 0)
        continue;
      assign(v, c, +1);
      branch(coloured + 1, used);
      assign(v, c, -1);
      if (best_count_ <= lower_bound_)
        return;
    }
    if (used + 1 < best_count_) {
      assign(v, used, +1);
      branch(coloured + 1, used + 1);
      assign(v, used, -1);
    }
  }

  Colouring renumbered(const std::vector<std::size_t> &raw) const {
    Colouring out;
    out.colour_of.assign(n_, 0);
    std::vector<std::size_t> remap(n_ + 1, unset);
    for (std::size_t v = 0; v < n_; ++v) {
      auto &slot = remap[raw[v]];
      if (slot == unset)
        slot = out.colours++;
      out.colour_of[v] = slot;
    }
    return out;
  }

  const DerivedGraph &g_;
  std::size_t n_;
  std::vector<std::size_t> colour_;
  std::vector<std::vector<int>> neighbour_colours_;
  std::vector<std::size_t> saturation_;
  std::vector<std::size_t> degree_;  // uncoloured neighbours
  std::vector<std::size_t> best_;
  std::size_t best_count_ = 0;
  std::size_t lower_bound_ = 0;
};

void sort_parts(CliqueCover &c) {
  for (auto &part : c.parts)
    std::sort(part.begin(), part.end());
  std::sort(c.parts.begin(), c.parts.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
}

}  // namespace

Colouring exact_colouring(const DerivedGraph &g) {
  return ColouringSearch(g).run();
}

CliqueCover exact_min_cover(const DerivedGraph &g, std::size_t cap) {
  if (g.vertex_count() > cap)
    throw CapExceeded("exact cover limited to " + std::to_string(cap) +
                      " vertices (graph has " + std::to_string(g.vertex_count()) +
                      "); use the greedy cover or raise the cap");
  CliqueCover cover;
  for (const auto &component : connected_components(g)) {
    const auto colouring = exact_colouring(g.induced(component).complement());
    std::vector<std::vector<std::size_t>> parts(colouring.colours);
    for (std::size_t k = 0; k < component.size(); ++k)
      parts[colouring.colour_of[k]].push_back(component[k]);
    for (auto &part : parts)
      cover.parts.push_back(std::move(part));
  }
  sort_parts(cover);
  return cover;
}

CliqueCover greedy_cover(const DerivedGraph &g) {
  CliqueCover cover;
  std::vector<VertexSet> members;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::size_t p = 0;
    while (p < members.size() && !members[p].is_subset_of(g.neighbors(v)))
      ++p;
    if (p == members.size()) {
      members.emplace_back(g.vertex_count());
      cover.parts.emplace_back();
    }
    members[p].set(v);
    cover.parts[p].push_back(v);
  }
  return cover;
}

std::optional<CoverViolation> verify_cover(const DerivedGraph &g,
                                           const CliqueCover &c) {
  using Kind = CoverViolation::Kind;
  const auto n = g.vertex_count();
  std::vector<int> hits(n, 0);
  for (std::size_t p = 0; p < c.parts.size(); ++p) {
    if (c.parts[p].empty())
      return CoverViolation{Kind::not_partition, p, {}, {},
                            "part " + std::to_string(p + 1) + " is empty"};
    for (auto v : c.parts[p]) {
      if (v >= n)
        return CoverViolation{Kind::not_partition, p, v, {},
                              "vertex " + std::to_string(v + 1) + " does not exist"};
      if (++hits[v] > 1)
        return CoverViolation{Kind::not_partition, p, v, {},
                              "vertex " + std::to_string(v + 1) +
                                  " appears in more than one part"};
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (hits[v] == 0)
      return CoverViolation{Kind::not_partition, {}, v, {},
                            "vertex " + std::to_string(v + 1) + " is not covered"};
  for (std::size_t p = 0; p < c.parts.size(); ++p) {
    const auto &part = c.parts[p];
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b)
        if (!g.adjacent(part[a], part[b]))
          return CoverViolation{Kind::not_clique, p, part[a], part[b],
                                "part " + std::to_string(p + 1) + " is not a clique: " +
                                    std::to_string(part[a] + 1) + " and " +
                                    std::to_string(part[b] + 1) + " are not adjacent"};
  }
  return std::nullopt;
}

}  // namespace icode
