#include "intbalance/bipartite.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

namespace intbalance {
namespace {

void check_weight_count(const BipartiteGraph& b, std::span<const Rational> w) {
  if (w.size() != b.edge_count()) {
    throw GraphError("expected " + std::to_string(b.edge_count()) +
                     " weights, got " + std::to_string(w.size()));
  }
}

}  // namespace

BipartiteGraph BipartiteGraph::lift(const Digraph& g) {
  BipartiteGraph b;
  b.n_ = g.vertex_count();
  b.edges_ = g.edges();
  b.adj_x_.resize(b.n_);
  b.adj_y_.resize(b.n_);
  for (EdgeId k = 0; k < b.edges_.size(); ++k) {
    b.adj_x_[b.edges_[k].tail].push_back(k);
    b.adj_y_[b.edges_[k].head].push_back(k);
  }
  return b;
}

std::span<const EdgeId> BipartiteGraph::incident(BipartiteVertex v) const {
  return v.side == Side::X ? adj_x_.at(v.index) : adj_y_.at(v.index);
}

BipartiteVertex BipartiteGraph::other_end(EdgeId k, BipartiteVertex v) const {
  const Edge& e = edges_.at(k);
  if (v.side == Side::X) {
    if (e.tail != v.index) throw GraphError("edge not incident to vertex");
    return {Side::Y, e.head};
  }
  if (e.head != v.index) throw GraphError("edge not incident to vertex");
  return {Side::X, e.tail};
}

DecimalCycle::DecimalCycle(const BipartiteGraph& b, std::size_t start_x,
                           std::vector<EdgeId> edges)
    : start_x_(start_x), edges_(std::move(edges)) {
  if (edges_.empty() || edges_.size() % 2 != 0) {
    throw GraphError("cycle must have a positive even number of edges");
  }
  std::unordered_set<EdgeId> seen;
  BipartiteVertex at{Side::X, start_x_};
  for (EdgeId k : edges_) {
    if (k >= b.edge_count()) throw GraphError("cycle edge out of range");
    if (!seen.insert(k).second) {
      throw GraphError("cycle repeats edge " + std::to_string(k));
    }
    at = b.other_end(k, at);
  }
  if (at != BipartiteVertex{Side::X, start_x_}) {
    throw GraphError("cycle is not closed");
  }
}

std::vector<BipartiteVertex> DecimalCycle::vertices(
    const BipartiteGraph& b) const {
  std::vector<BipartiteVertex> out;
  out.reserve(edges_.size() + 1);
  BipartiteVertex at{Side::X, start_x_};
  out.push_back(at);
  for (EdgeId k : edges_) {
    at = b.other_end(k, at);
    out.push_back(at);
  }
  return out;
}

DecimalCycle DecimalCycle::rotated(const BipartiteGraph& b,
                                   std::size_t pos) const {
  if (pos >= edges_.size() || !is_odd_position(pos)) {
    throw GraphError("rotation must start at an x->y edge");
  }
  std::vector<EdgeId> e(edges_.begin() + static_cast<std::ptrdiff_t>(pos),
                        edges_.end());
  e.insert(e.end(), edges_.begin(),
           edges_.begin() + static_cast<std::ptrdiff_t>(pos));
  return DecimalCycle(b, b.edge(edges_[pos]).tail, std::move(e));
}

DecimalCycle DecimalCycle::reversed_from(const BipartiteGraph& b,
                                         std::size_t pos) const {
  if (pos >= edges_.size() || is_odd_position(pos)) {
    throw GraphError("reversal must start at a y->x edge");
  }
  std::vector<EdgeId> e;
  e.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    e.push_back(edges_[(pos + edges_.size() - i) % edges_.size()]);
  }
  return DecimalCycle(b, b.edge(edges_[pos]).tail, std::move(e));
}

VertexWeights check_balanced_bipartite(const BipartiteGraph& b,
                                       std::span<const Rational> w) {
  check_weight_count(b, w);
  std::vector<Rational> x_sum(b.side_size());
  std::vector<Rational> y_sum(b.side_size());
  for (EdgeId k = 0; k < b.edge_count(); ++k) {
    if (w[k].is_negative()) {
      throw GraphError("edge " + std::to_string(k) + " has negative weight");
    }
    x_sum[b.edge(k).tail] += w[k];
    y_sum[b.edge(k).head] += w[k];
  }
  for (std::size_t i = 0; i < b.side_size(); ++i) {
    if (x_sum[i] != y_sum[i]) {
      throw NotBalanced(i, x_sum[i].to_string(), y_sum[i].to_string(),
                        Side::X);
    }
  }
  return VertexWeights(std::move(x_sum));
}

std::size_t decimal_degree(const BipartiteGraph& b, std::span<const Rational> w,
                           BipartiteVertex v) {
  check_weight_count(b, w);
  const auto inc = b.incident(v);
  return static_cast<std::size_t>(std::count_if(
      inc.begin(), inc.end(), [&](EdgeId k) { return is_decimal(w[k]); }));
}

std::size_t count_decimal_edges(std::span<const Rational> w) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [](const Rational& r) {
        return is_decimal(r);
      }));
}

}  // namespace intbalance
