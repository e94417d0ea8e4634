#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "intbalance/digraph.hpp"
#include "intbalance/errors.hpp"
#include "intbalance/rational.hpp"

namespace intbalance {

struct BipartiteVertex {
  Side side;
  std::size_t index;
  friend bool operator==(const BipartiteVertex&,
                         const BipartiteVertex&) = default;
};

/// Undirected bipartite graph B = (X, Y, F) with |X| = |Y| = n. Edge k joins
/// x_tail and y_head of edge k of the source digraph, so weights are shared
/// positionally between G and B.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  static BipartiteGraph lift(const Digraph& g);

  std::size_t side_size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// (x index, y index) of edge k.
  const Edge& edge(EdgeId k) const { return edges_.at(k); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const EdgeId> incident(BipartiteVertex v) const;

  /// Endpoint of k opposite to v. v must be incident to k.
  BipartiteVertex other_end(EdgeId k, BipartiteVertex v) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adj_x_;
  std::vector<std::vector<EdgeId>> adj_y_;
};

/// Closed alternating walk x_a1 y_b1 x_a2 y_b2 ... y_bp x_a1 in B, stored as
/// the 2p edge ids in traversal order. Positions 0, 2, 4, ... are the x->y
/// ("odd") edges (x_ai, y_bi); positions 1, 3, ... are the y->x ("even")
/// edges (y_bi, x_a(i+1)).
class DecimalCycle {
 public:
  /// Validates alternation, closure and that no edge repeats. Decimality of
  /// the weights is checked where the cycle is produced or consumed.
  DecimalCycle(const BipartiteGraph& b, std::size_t start_x,
               std::vector<EdgeId> edges);

  std::size_t start_x() const { return start_x_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  static bool is_odd_position(std::size_t pos) { return pos % 2 == 0; }

  /// Vertices visited, starting and ending at x_start (length() + 1 entries).
  std::vector<BipartiteVertex> vertices(const BipartiteGraph& b) const;

  /// Same cycle entered at the x-vertex preceding position `pos`; `pos` must
  /// be an odd (x->y) position.
  DecimalCycle rotated(const BipartiteGraph& b, std::size_t pos) const;

  /// Same cycle traversed backwards, starting from the x-vertex that ends
  /// the edge at (even) position `pos`, so that edge comes first.
  DecimalCycle reversed_from(const BipartiteGraph& b, std::size_t pos) const;

 private:
  std::size_t start_x_;
  std::vector<EdgeId> edges_;
};

/// Vertex weights for B: the sum at x_i must equal the sum at y_i for every
/// i. A mismatch throws NotBalanced carrying (x_i sum, y_i sum).
VertexWeights check_balanced_bipartite(const BipartiteGraph& b,
                                       std::span<const Rational> w);

/// Number of decimal edges incident to v.
std::size_t decimal_degree(const BipartiteGraph& b, std::span<const Rational> w,
                           BipartiteVertex v);

std::size_t count_decimal_edges(std::span<const Rational> w);

}  // namespace intbalance
