#include "intbalance/digraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "intbalance/errors.hpp"

namespace intbalance {

Digraph::Digraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), out_adj_(n), in_adj_(n) {
  std::unordered_set<std::size_t> seen;
  seen.reserve(edges_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [tail, head] = edges_[e];
    if (tail >= n_ || head >= n_) {
      throw GraphError("edge " + std::to_string(e) + " (" +
                       std::to_string(tail) + "," + std::to_string(head) +
                       ") has an endpoint outside [0," + std::to_string(n_) +
                       ")");
    }
    if (!seen.insert(tail * n_ + head).second) {
      throw GraphError("parallel edge " + std::to_string(tail) + "->" +
                       std::to_string(head));
    }
    out_adj_[tail].push_back(e);
    in_adj_[head].push_back(e);
  }
}

std::span<const EdgeId> Digraph::out_edges(Vertex v) const {
  return out_adj_.at(v);
}

std::span<const EdgeId> Digraph::in_edges(Vertex v) const {
  return in_adj_.at(v);
}

std::optional<EdgeId> Digraph::find_edge(Vertex tail, Vertex head) const {
  if (tail >= n_) return std::nullopt;
  for (EdgeId e : out_adj_[tail]) {
    if (edges_[e].head == head) return e;
  }
  return std::nullopt;
}

VertexWeights::VertexWeights(std::vector<Rational> u) : u_(std::move(u)) {
  for (std::size_t i = 0; i < u_.size(); ++i) {
    if (u_[i].is_negative()) {
      throw GraphError("vertex weight " + std::to_string(i) + " is negative");
    }
  }
}

bool VertexWeights::is_integral() const { return !first_non_integer(); }

std::optional<Vertex> VertexWeights::first_non_integer() const {
  for (Vertex v = 0; v < u_.size(); ++v) {
    if (!u_[v].is_integer()) return v;
  }
  return std::nullopt;
}

WeightedDigraph::WeightedDigraph(Digraph graph, std::vector<Rational> weights)
    : graph_(std::move(graph)), w_(std::move(weights)) {
  if (w_.size() != graph_.edge_count()) {
    throw GraphError("expected " + std::to_string(graph_.edge_count()) +
                     " weights, got " + std::to_string(w_.size()));
  }
  for (EdgeId e = 0; e < w_.size(); ++e) {
    if (w_[e].is_negative()) {
      throw GraphError("edge " + std::to_string(e) + " has negative weight " +
                       w_[e].to_string());
    }
  }
}

WeightedDigraph WeightedDigraph::with_weights(
    std::vector<Rational> weights) const {
  return WeightedDigraph(graph_, std::move(weights));
}

Rational out_sum(const WeightedDigraph& g, Vertex i) {
  if (i >= g.graph().vertex_count()) {
    throw GraphError("vertex " + std::to_string(i) + " out of range");
  }
  Rational s;
  for (EdgeId e : g.graph().out_edges(i)) s += g.weights()[e];
  return s;
}

Rational in_sum(const WeightedDigraph& g, Vertex i) {
  if (i >= g.graph().vertex_count()) {
    throw GraphError("vertex " + std::to_string(i) + " out of range");
  }
  Rational s;
  for (EdgeId e : g.graph().in_edges(i)) s += g.weights()[e];
  return s;
}

VertexWeights check_balanced(const WeightedDigraph& g) {
  std::vector<Rational> u;
  u.reserve(g.graph().vertex_count());
  for (Vertex i = 0; i < g.graph().vertex_count(); ++i) {
    Rational out = out_sum(g, i);
    Rational in = in_sum(g, i);
    if (out != in) throw NotBalanced(i, out.to_string(), in.to_string());
    u.push_back(std::move(out));
  }
  return VertexWeights(std::move(u));
}

std::vector<std::vector<Vertex>> strongly_connected_components(
    const Digraph& g) {
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> components;
  std::size_t next_index = 0;

  // Explicit DFS frames: (vertex, position in its out-edge list).
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto out = g.out_edges(v);
      if (pos < out.size()) {
        const Vertex w = g.edge(out[pos++]).head;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<Vertex> component;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

bool is_strongly_connected(const Digraph& g) {
  return strongly_connected_components(g).size() == 1;
}

Subgraph induced_subgraph(const Digraph& g, std::span<const Vertex> vertices) {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> local(g.vertex_count(), kAbsent);
  Subgraph sub;
  for (Vertex v : vertices) {
    if (v >= g.vertex_count()) {
      throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    if (local[v] != kAbsent) continue;
    local[v] = sub.vertex_map.size();
    sub.vertex_map.push_back(v);
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [tail, head] = g.edge(e);
    if (local[tail] == kAbsent || local[head] == kAbsent) continue;
    edges.push_back({local[tail], local[head]});
    sub.edge_map.push_back(e);
  }
  sub.graph = Digraph(sub.vertex_map.size(), std::move(edges));
  return sub;
}

}  // namespace intbalance
