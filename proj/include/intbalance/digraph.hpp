#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "intbalance/rational.hpp"

namespace intbalance {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex tail;
  Vertex head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple directed graph on vertices 0..n-1. Self-arcs are allowed, parallel
/// edges are not. Edge ids are positions in the edge list.
class Digraph {
 public:
  Digraph() = default;
  /// Throws GraphError on an out-of-range endpoint or a repeated (tail, head).
  Digraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Ids of edges leaving / entering v, ascending.
  std::span<const EdgeId> out_edges(Vertex v) const;
  std::span<const EdgeId> in_edges(Vertex v) const;

  std::optional<EdgeId> find_edge(Vertex tail, Vertex head) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_adj_;
  std::vector<std::vector<EdgeId>> in_adj_;
};

/// Common in/out sums u of a balanced weighting, one per vertex.
class VertexWeights {
 public:
  VertexWeights() = default;
  /// Throws GraphError if any entry is negative.
  explicit VertexWeights(std::vector<Rational> u);

  std::size_t size() const { return u_.size(); }
  const Rational& operator[](Vertex v) const { return u_[v]; }
  const std::vector<Rational>& values() const { return u_; }

  bool is_integral() const;
  /// First vertex with a non-integer weight, if any.
  std::optional<Vertex> first_non_integer() const;

  friend bool operator==(const VertexWeights&, const VertexWeights&) = default;

 private:
  std::vector<Rational> u_;
};

/// A digraph together with one nonnegative weight per edge.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  /// Throws GraphError if the weight count differs from the edge count or a
  /// weight is negative.
  WeightedDigraph(Digraph graph, std::vector<Rational> weights);

  const Digraph& graph() const { return graph_; }
  const std::vector<Rational>& weights() const { return w_; }
  const Rational& weight(EdgeId e) const { return w_.at(e); }

  /// Same graph, new weights (validated as in the constructor).
  WeightedDigraph with_weights(std::vector<Rational> weights) const;

 private:
  Digraph graph_;
  std::vector<Rational> w_;
};

/// Sum of weights over edges with tail i (a self-arc counts once).
Rational out_sum(const WeightedDigraph& g, Vertex i);
/// Sum of weights over edges with head i.
Rational in_sum(const WeightedDigraph& g, Vertex i);

/// Returns u with u_i = out_sum(i) = in_sum(i); throws NotBalanced naming the
/// first vertex where the two differ.
VertexWeights check_balanced(const WeightedDigraph& g);

/// Tarjan's algorithm. Components come out in reverse topological order of
/// the condensation (sink components first); vertices inside a component are
/// sorted ascending.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

/// Induced subgraph on a vertex subset, with maps back to the parent graph.
struct Subgraph {
  Digraph graph;
  std::vector<Vertex> vertex_map;  // local vertex -> parent vertex
  std::vector<EdgeId> edge_map;    // local edge -> parent edge
};

Subgraph induced_subgraph(const Digraph& g, std::span<const Vertex> vertices);

}  // namespace intbalance
