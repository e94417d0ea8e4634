#pragma once

// Brute-force verifiers for tests. Nothing here calls into the integerize
// module; results are computed from the raw edge lists.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "intbalance/bipartite.hpp"
#include "intbalance/digraph.hpp"
#include "intbalance/rational.hpp"

namespace intbalance::oracle {

/// Every simple cycle of B that uses decimal edges only, each reported once
/// (up to rotation and reflection) and entered at its lowest x-vertex.
/// Throws std::length_error when more than `max_decimal_edges` edges are
/// decimal.
std::vector<DecimalCycle> enumerate_completely_decimal_cycles(
    const BipartiteGraph& b, std::span<const Rational> w,
    std::size_t max_decimal_edges = 20);

/// Simple directed cycles of g as edge-id lists (self-arcs are length 1).
std::vector<std::vector<EdgeId>> enumerate_directed_cycles(const Digraph& g);

/// All w in [0, cap]^|E| balanced with vertex weights u. Throws
/// std::length_error for |E| > 10 or cap > 8.
std::vector<std::vector<std::int64_t>> brute_force_integer_solutions(
    const Digraph& g, std::span<const std::int64_t> u, std::int64_t cap);

/// Recomputes every in- and out-sum from the edge list and compares with u.
bool realises(const Digraph& g, std::span<const Rational> w,
              std::span<const Rational> u);

/// Small balanced instance with integral vertex weights: a random digraph
/// on 2..5 vertices with at most 8 edges, weighted by a random nonnegative
/// combination of its directed cycles with coefficients k/d, d in {1,..,4}.
/// Draws are retried until the vertex weights come out integral and, for
/// d > 1, at least one edge is decimal.
WeightedDigraph sample_tiny_instance(std::uint64_t seed);

}  // namespace intbalance::oracle
