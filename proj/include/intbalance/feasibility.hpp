#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "intbalance/bipartite.hpp"
#include "intbalance/digraph.hpp"
#include "intbalance/rational.hpp"

namespace intbalance {

/// Supply u_i at every x_i, demand u_i at every y_i, unbounded capacity on
/// the edges of B. A vertex-weight vector is feasible exactly when this
/// transportation problem has a solution.
struct TransportationInstance {
  BipartiteGraph lift;
  std::vector<Rational> supply;
  std::vector<Rational> demand;

  TransportationInstance(const Digraph& g, const VertexWeights& u);
  Rational total_supply() const;
  Rational total_demand() const;
};

/// Balanced weighting realising u, found by Edmonds-Karp max-flow over the
/// transportation instance in exact arithmetic. Throws Infeasible carrying
/// the saturated cut when no weighting exists.
///
/// For integral u the flow (and so the result) is integral as well.
std::vector<Rational> solve_feasible_w(const Digraph& g, const VertexWeights& u);

struct GeneratorParams {
  /// Integer circulation weights are drawn from [1, max_weight].
  std::int64_t max_weight = 4;
  /// Fractional shifts use one denominator d in [2, max_denominator] per
  /// instance; 1 disables them and yields integer weights.
  std::int64_t max_denominator = 8;
  /// Number of alternating-cycle shifts to attempt; 0 picks |E| / 4 + 1.
  std::size_t shifts = 0;
};

/// Random balanced weighting of a strongly connected g with integral vertex
/// weights. Every edge first gets a positive integer circulation (the edge
/// plus a shortest return path), then alternating cycles of the lift receive
/// +q/d, -q/d shifts, which keep every vertex weight unchanged.
///
/// When the lift has no cycle (e.g. g is a single directed cycle) the result
/// stays integral. Deterministic in (g, seed, params). Throws GraphError if g
/// is not strongly connected.
WeightedDigraph generate_balanced_instance(const Digraph& g, std::uint64_t seed,
                                           const GeneratorParams& params = {});

/// Random strongly connected digraph: a Hamiltonian cycle over a shuffled
/// vertex order plus random extra edges (self-arcs allowed) up to m edges.
Digraph random_strongly_connected_digraph(std::size_t n, std::size_t m,
                                          std::uint64_t seed);

/// Two vertices, edges in order 0->0, 0->1, 1->0, 1->1, every weight 1/2.
WeightedDigraph canonical_two_cycle_instance();

}  // namespace intbalance
