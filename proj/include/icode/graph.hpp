#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "icode/instance.hpp"

namespace icode {

struct CliqueCover;

using VertexSet = boost::dynamic_bitset<>;

// Undirected, irreflexive graph on 0-based vertices stored as dense
// adjacency rows. Vertex i of a derived graph is virtuals[i].
class DerivedGraph {
public:
  DerivedGraph() = default;
  explicit DerivedGraph(std::size_t vertex_count);

  static DerivedGraph from_edges(
      std::size_t vertex_count,
      const std::vector<std::pair<std::size_t, std::size_t>> &edges);

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  bool adjacent(std::size_t p, std::size_t q) const { return rows_[p].test(q); }
  const VertexSet &neighbors(std::size_t p) const { return rows_[p]; }
  std::size_t edge_count() const;

  // Sorted (p < q) edge list.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  void add_edge(std::size_t p, std::size_t q);

  DerivedGraph complement() const;
  // Subgraph on `vertices` (ascending); vertex k of the result is vertices[k].
  DerivedGraph induced(const std::vector<std::size_t> &vertices) const;

private:
  std::vector<VertexSet> rows_;
};

struct GraphOptions {
  // Drop the equal-demand clause and use plain mutual side information.
  bool strict_cross_neighbor = false;
};

// Edge {p,q} iff p != q and (d_p == d_q, or d_p in S_q and d_q in S_p).
DerivedGraph build_cross_neighbor_graph(const UnicastInstance &u,
                                        GraphOptions options = {});

// Components ordered by smallest member, members ascending.
std::vector<std::vector<std::size_t>> connected_components(const DerivedGraph &g);

// Messages m<i> and receivers r<j>; solid edges for side information,
// dashed for demands.
std::string export_bipartite_dot(const Instance &inst);

// Virtual receivers r<j>_<k> with cross-neighbor edges. With a cover, each
// part becomes a filled cluster.
std::string export_derived_dot(const UnicastInstance &u, const DerivedGraph &g,
                               const CliqueCover *overlay = nullptr);

}  // namespace icode
