#include "gerbe/graphs.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gerbe::graphs {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

ModularGraph::ModularGraph(std::vector<FlagId> involution, std::vector<VertexId> attach,
                           std::vector<int> vertex_genus)
    : involution_(std::move(involution)), attach_(std::move(attach)), genus_(std::move(vertex_genus)) {
  if (genus_.empty()) throw std::invalid_argument("graph must have at least one vertex");
  if (attach_.size() != involution_.size()) {
    throw std::invalid_argument("involution and attachment maps must have the same domain");
  }
  for (auto g : genus_) {
    if (g < 0) throw std::invalid_argument("vertex genus must be nonnegative");
  }
  const auto nf = involution_.size();
  flag_to_edge_.assign(nf, kNone);
  flag_to_tail_.assign(nf, kNone);
  for (FlagId f = 0; f < nf; ++f) {
    if (involution_[f] >= nf || involution_[involution_[f]] != f) {
      throw std::invalid_argument("flag involution is not an involution at flag " + std::to_string(f));
    }
    if (attach_[f] >= genus_.size()) {
      throw std::invalid_argument("flag " + std::to_string(f) + " attached to a missing vertex");
    }
    if (involution_[f] == f) {
      flag_to_tail_[f] = tails_.size();
      tails_.push_back(f);
    } else if (f < involution_[f]) {
      flag_to_edge_[f] = flag_to_edge_[involution_[f]] = edges_.size();
      edges_.push_back({f, involution_[f]});
    }
  }
  if (components_without(std::vector<bool>(edges_.size(), false)).size() != 1) {
    throw std::invalid_argument("dual graph is disconnected");
  }
}

ModularGraph ModularGraph::from_description(std::vector<int> vertex_genus,
                                            const std::vector<std::pair<VertexId, VertexId>>& edges,
                                            const std::vector<VertexId>& tails) {
  const auto n = tails.size();
  std::vector<FlagId> inv(n + 2 * edges.size());
  std::vector<VertexId> attach(inv.size());
  for (std::size_t i = 0; i < n; ++i) {
    inv[i] = i;
    attach[i] = tails[i];
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto a = n + 2 * e;
    inv[a] = a + 1;
    inv[a + 1] = a;
    attach[a] = edges[e].first;
    attach[a + 1] = edges[e].second;
  }
  return ModularGraph(std::move(inv), std::move(attach), std::move(vertex_genus));
}

std::pair<VertexId, VertexId> ModularGraph::endpoints(std::size_t edge) const {
  const auto& e = edges_.at(edge);
  return {attach_[e.first], attach_[e.second]};
}

bool ModularGraph::is_self_loop(std::size_t edge) const {
  auto [a, b] = endpoints(edge);
  return a == b;
}

std::size_t ModularGraph::edge_of(FlagId f) const {
  if (flag_to_edge_.at(f) == kNone) throw std::invalid_argument("flag is a tail, not part of an edge");
  return flag_to_edge_[f];
}

std::size_t ModularGraph::tail_index(FlagId f) const {
  if (flag_to_tail_.at(f) == kNone) throw std::invalid_argument("flag belongs to an edge, not a tail");
  return flag_to_tail_[f];
}

std::vector<std::vector<VertexId>> ModularGraph::components_without(
    const std::vector<bool>& removed_edges) const {
  const auto nv = genus_.size();
  std::vector<VertexId> parent(nv);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (removed_edges.at(e)) continue;
    auto [a, b] = endpoints(e);
    parent[find(a)] = find(b);
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<std::size_t> slot(nv, kNone);
  for (VertexId v = 0; v < nv; ++v) {
    auto root = find(v);
    if (slot[root] == kNone) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

int betti1(const ModularGraph& graph) {
  return 1 - static_cast<int>(graph.num_vertices()) + static_cast<int>(graph.num_edges());
}

int total_genus(const ModularGraph& graph) {
  const auto& g = graph.vertex_genera();
  return std::accumulate(g.begin(), g.end(), 0) + betti1(graph);
}

EdgeClassification classify_edges(const ModularGraph& graph) {
  // Bridge finding by DFS low-link; edges are tracked by id so parallel
  // edges and self-loops are handled without special cases.
  const auto nv = graph.num_vertices();
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(nv);
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    auto [a, b] = graph.endpoints(e);
    adj[a].push_back({b, e});
    if (a != b) adj[b].push_back({a, e});
  }
  std::vector<int> disc(nv, -1), low(nv, 0);
  std::vector<bool> bridge(graph.num_edges(), false);
  int timer = 0;
  std::function<void(VertexId, std::size_t)> dfs = [&](VertexId v, std::size_t via) {
    disc[v] = low[v] = timer++;
    for (auto [w, e] : adj[v]) {
      if (e == via) continue;
      if (disc[w] == -1) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridge[e] = true;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(0, kNone);

  EdgeClassification out;
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    (bridge[e] ? out.separating : out.non_separating).push_back(e);
  }
  return out;
}

bool is_separating(const ModularGraph& graph, std::size_t edge) {
  const auto sep = classify_edges(graph).separating;
  return std::find(sep.begin(), sep.end(), edge) != sep.end();
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> split_at_edge(const ModularGraph& graph,
                                                                      std::size_t edge) {
  if (edge >= graph.num_edges()) throw std::invalid_argument("edge index out of range");
  std::vector<bool> removed(graph.num_edges(), false);
  removed[edge] = true;
  auto comps = graph.components_without(removed);
  if (comps.size() != 2) throw std::invalid_argument("edge " + std::to_string(edge) + " is not separating");
  const auto anchor = graph.vertex_of(graph.edges()[edge].first);
  if (std::find(comps[0].begin(), comps[0].end(), anchor) == comps[0].end()) std::swap(comps[0], comps[1]);
  return {std::move(comps[0]), std::move(comps[1])};
}

GerbyGraph::GerbyGraph(ModularGraph base, std::vector<std::int64_t> gamma)
    : base_(std::move(base)), gamma_(std::move(gamma)) {
  if (gamma_.size() != base_.num_flags()) {
    throw std::invalid_argument("gerby decoration must assign an order to every flag");
  }
  for (FlagId f = 0; f < gamma_.size(); ++f) {
    if (gamma_[f] < 1) throw std::invalid_argument("isotropy orders must be >= 1");
    if (gamma_[f] != gamma_[base_.opposite(f)]) {
      throw std::invalid_argument("isotropy order differs across the two flags of edge " +
                                  std::to_string(base_.edge_of(f)));
    }
  }
}

GerbyGraph GerbyGraph::decorate(ModularGraph base, const std::vector<std::int64_t>& tail_orders,
                                const std::vector<std::int64_t>& edge_orders) {
  if (tail_orders.size() != base.num_tails() || edge_orders.size() != base.num_edges()) {
    throw std::invalid_argument("expected " + std::to_string(base.num_tails()) + " tail orders and " +
                                std::to_string(base.num_edges()) + " edge orders");
  }
  std::vector<std::int64_t> gamma(base.num_flags());
  for (std::size_t i = 0; i < tail_orders.size(); ++i) gamma[base.tails()[i]] = tail_orders[i];
  for (std::size_t e = 0; e < edge_orders.size(); ++e) {
    gamma[base.edges()[e].first] = gamma[base.edges()[e].second] = edge_orders[e];
  }
  return GerbyGraph(std::move(base), std::move(gamma));
}

std::vector<std::int64_t> GerbyGraph::tail_orders() const {
  std::vector<std::int64_t> out;
  for (auto f : base_.tails()) out.push_back(gamma_[f]);
  return out;
}

std::vector<std::int64_t> GerbyGraph::edge_orders() const {
  std::vector<std::int64_t> out;
  for (const auto& e : base_.edges()) out.push_back(gamma_[e.first]);
  return out;
}

}  // namespace gerbe::graphs
