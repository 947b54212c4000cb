#include "icode/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "icode/cover.hpp"

namespace icode {

DerivedGraph::DerivedGraph(std::size_t vertex_count)
    : rows_(vertex_count, VertexSet(vertex_count)) {}

DerivedGraph DerivedGraph::from_edges(
    std::size_t vertex_count,
    const std::vector<std::pair<std::size_t, std::size_t>> &edges) {
  DerivedGraph g(vertex_count);
  for (auto [p, q] : edges)
    g.add_edge(p, q);
  return g;
}

void DerivedGraph::add_edge(std::size_t p, std::size_t q) {
  if (p == q)
    return;
  rows_[p].set(q);
  rows_[q].set(p);
}

std::size_t DerivedGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto &row : rows_)
    twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> DerivedGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < rows_.size(); ++p)
    for (auto q = rows_[p].find_next(p); q != VertexSet::npos; q = rows_[p].find_next(q))
      out.emplace_back(p, q);
  return out;
}

DerivedGraph DerivedGraph::complement() const {
  DerivedGraph c(vertex_count());
  for (std::size_t p = 0; p < rows_.size(); ++p) {
    c.rows_[p] = ~rows_[p];
    c.rows_[p].reset(p);
  }
  return c;
}

DerivedGraph DerivedGraph::induced(const std::vector<std::size_t> &vertices) const {
  DerivedGraph sub(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (adjacent(vertices[a], vertices[b]))
        sub.add_edge(a, b);
  return sub;
}

DerivedGraph build_cross_neighbor_graph(const UnicastInstance &u,
                                        GraphOptions options) {
  const auto &vs = u.virtuals;
  DerivedGraph g(vs.size());
  for (std::size_t p = 0; p < vs.size(); ++p) {
    for (std::size_t q = p + 1; q < vs.size(); ++q) {
      const bool same_demand = vs[p].want == vs[q].want;
      const bool mutual = contains(vs[q].has, vs[p].want) &&
                          contains(vs[p].has, vs[q].want);
      if (mutual || (same_demand && !options.strict_cross_neighbor))
        g.add_edge(p, q);
    }
  }
  return g;
}

std::vector<std::vector<std::size_t>> connected_components(const DerivedGraph &g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<std::size_t>> out;
  VertexSet seen(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen.test(root))
      continue;
    std::vector<std::size_t> members{root};
    seen.set(root);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto &nb = g.neighbors(members[i]);
      for (auto q = nb.find_first(); q != VertexSet::npos; q = nb.find_next(q)) {
        if (!seen.test(q)) {
          seen.set(q);
          members.push_back(q);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

namespace {

std::string join_ids(const MessageSet &ids, const char *sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    out << (i ? sep : "") << ids[i];
  return out.str();
}

std::string virtual_name(const VirtualReceiver &v) {
  return "r" + std::to_string(v.origin.receiver + 1) + "_" +
         std::to_string(v.origin.demand + 1);
}

}  // namespace

std::string export_bipartite_dot(const Instance &inst) {
  std::ostringstream out;
  out << "graph bipartite {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (int i = 1; i <= inst.num_messages; ++i)
    out << "  m" << i << " [label=\"w" << i << "\"];\n";
  out << "  node [shape=box];\n";
  for (std::size_t j = 0; j < inst.receivers.size(); ++j) {
    const auto &r = inst.receivers[j];
    out << "  r" << j + 1 << " [label=\"r" << j + 1 << "(" << join_ids(r.wants, ",")
        << " | " << join_ids(r.has, ",") << ")\"];\n";
  }
  for (std::size_t j = 0; j < inst.receivers.size(); ++j) {
    const auto &r = inst.receivers[j];
    for (auto id : r.has)
      out << "  r" << j + 1 << " -- m" << id << ";\n";
    for (auto id : r.wants)
      out << "  r" << j + 1 << " -- m" << id << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_derived_dot(const UnicastInstance &u, const DerivedGraph &g,
                               const CliqueCover *overlay) {
  std::ostringstream out;
  out << "graph derived {\n";
  out << "  node [shape=box];\n";
  for (const auto &v : u.virtuals)
    out << "  " << virtual_name(v) << " [label=\"" << virtual_name(v) << ": w"
        << v.want << " | " << join_ids(v.has, ",") << "\"];\n";
  if (overlay) {
    for (std::size_t p = 0; p < overlay->parts.size(); ++p) {
      std::set<MessageId> wants;
      for (auto vtx : overlay->parts[p])
        wants.insert(u.virtuals[vtx].want);
      MessageSet sum(wants.begin(), wants.end());
      std::string label;
      for (auto id : sum)
        label += (label.empty() ? "w" : " + w") + std::to_string(id);
      out << "  subgraph cluster_" << p + 1 << " {\n";
      out << "    label=\"" << label << "\";\n";
      out << "    style=filled;\n";
      out << "    fillcolor=\"/pastel19/" << p % 9 + 1 << "\";\n";
      for (auto vtx : overlay->parts[p])
        out << "    " << virtual_name(u.virtuals[vtx]) << ";\n";
      out << "  }\n";
    }
  }
  for (auto [p, q] : g.edges())
    out << "  " << virtual_name(u.virtuals[p]) << " -- "
        << virtual_name(u.virtuals[q]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace icode
