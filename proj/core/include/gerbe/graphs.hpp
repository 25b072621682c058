#pragma once

// Dual graphs of prestable curves and their gerby decorations.
//
// A graph is a set of flags F with an involution j, an attachment map
// F -> V and a genus per vertex. Fixed points of j are tails (marked points),
// two-element orbits are edges (nodes). Vertices and edges are derived views.
//
// Graphs built with from_description number flags tails first, then the two
// flags of edge e as (n + 2e, n + 2e + 1); tail i and edge e then keep the
// indices they had in the description.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gerbe::graphs {

using FlagId = std::size_t;
using VertexId = std::size_t;

struct Edge {
  FlagId first;   // smaller flag of the orbit
  FlagId second;
};

struct EdgeClassification {
  std::vector<std::size_t> separating;
  std::vector<std::size_t> non_separating;
};

class ModularGraph {
 public:
  /// Validates the flag data; throws std::invalid_argument on a malformed
  /// involution, out-of-range attachment, negative genus or a disconnected graph.
  ModularGraph(std::vector<FlagId> involution, std::vector<VertexId> attach,
               std::vector<int> vertex_genus);

  static ModularGraph from_description(std::vector<int> vertex_genus,
                                       const std::vector<std::pair<VertexId, VertexId>>& edges,
                                       const std::vector<VertexId>& tails);

  std::size_t num_vertices() const { return genus_.size(); }
  std::size_t num_flags() const { return involution_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_tails() const { return tails_.size(); }

  FlagId opposite(FlagId f) const { return involution_.at(f); }
  VertexId vertex_of(FlagId f) const { return attach_.at(f); }
  int vertex_genus(VertexId v) const { return genus_.at(v); }
  const std::vector<int>& vertex_genera() const { return genus_; }

  /// Tail flags in increasing flag order.
  const std::vector<FlagId>& tails() const { return tails_; }
  /// Edges ordered by their smaller flag.
  const std::vector<Edge>& edges() const { return edges_; }
  std::pair<VertexId, VertexId> endpoints(std::size_t edge) const;
  bool is_self_loop(std::size_t edge) const;
  /// Edge index of a flag belonging to an edge; throws for tails.
  std::size_t edge_of(FlagId f) const;
  /// Tail index of a tail flag; throws for edge flags.
  std::size_t tail_index(FlagId f) const;

  /// Connected components with the given edges ignored.
  std::vector<std::vector<VertexId>> components_without(const std::vector<bool>& removed_edges) const;

 private:
  std::vector<FlagId> involution_;
  std::vector<VertexId> attach_;
  std::vector<int> genus_;
  std::vector<FlagId> tails_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> flag_to_edge_;
  std::vector<std::size_t> flag_to_tail_;
};

/// 1 - |V| + |E|.
int betti1(const ModularGraph& graph);

/// sum of vertex genera + betti1: the arithmetic genus of the curve.
int total_genus(const ModularGraph& graph);

/// An edge is separating iff deleting it disconnects the graph.
EdgeClassification classify_edges(const ModularGraph& graph);

bool is_separating(const ModularGraph& graph, std::size_t edge);

/// The two vertex sets left after deleting separating edge `edge`: first the
/// side containing the endpoint of its smaller flag. Rejects non-separating edges.
std::pair<std::vector<VertexId>, std::vector<VertexId>> split_at_edge(const ModularGraph& graph,
                                                                      std::size_t edge);

/// A dual graph whose flags carry isotropy orders, constant on each edge.
class GerbyGraph {
 public:
  GerbyGraph(ModularGraph base, std::vector<std::int64_t> gamma);

  /// Orders listed per tail and per edge in the base graph's index order.
  static GerbyGraph decorate(ModularGraph base, const std::vector<std::int64_t>& tail_orders,
                             const std::vector<std::int64_t>& edge_orders);

  const ModularGraph& base() const { return base_; }
  std::int64_t gamma(FlagId f) const { return gamma_.at(f); }
  const std::vector<std::int64_t>& gammas() const { return gamma_; }
  std::int64_t tail_order(std::size_t tail) const { return gamma_.at(base_.tails().at(tail)); }
  std::int64_t edge_order(std::size_t edge) const { return gamma_.at(base_.edges().at(edge).first); }
  std::vector<std::int64_t> tail_orders() const;
  std::vector<std::int64_t> edge_orders() const;

 private:
  ModularGraph base_;
  std::vector<std::int64_t> gamma_;
};

}  // namespace gerbe::graphs
