#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "intbalance/bipartite.hpp"
#include "intbalance/digraph.hpp"
#include "intbalance/rational.hpp"

namespace intbalance {

/// Walks decimal edges of B to close a cycle made only of decimal edges.
///
/// The walk is deterministic: it starts at the lowest x-vertex that meets a
/// decimal edge, always leaves a vertex by its lowest-id decimal edge other
/// than the one it arrived on, and stops at the first repeated vertex (on
/// either side). The cycle between the two visits is returned, rotated to
/// begin at an x-vertex.
///
/// Returns nullopt when no edge is decimal. Throws InvariantViolation if the
/// walk reaches a vertex with a single decimal edge, which cannot happen
/// when (b, w) is balanced with integer vertex weights.
std::optional<DecimalCycle> find_completely_decimal_cycle(
    const BipartiteGraph& b, std::span<const Rational> w);

struct CycleShift {
  std::vector<Rational> weights;
  Rational epsilon;
  /// The cycle as applied: its first edge carries the smallest decimal part
  /// and every odd-position edge was decreased by epsilon.
  DecimalCycle oriented;
};

/// One update step. epsilon is the smallest decimal part on the cycle; the
/// cycle is re-entered so the first edge attaining it sits in an x->y
/// position (reversing direction if needed). x->y edges lose epsilon, y->x
/// edges gain it, nothing else changes.
///
/// Throws NotCompletelyDecimal if some cycle edge is already integral.
CycleShift cycle_shift(const BipartiteGraph& b, std::span<const Rational> w,
                       const DecimalCycle& c);

struct IterationRecord {
  std::size_t cycle_length;
  Rational epsilon;
  std::size_t decimal_edges_eliminated;
  std::size_t decimal_edges_remaining;
};

struct IntegerizeReport {
  std::size_t iterations = 0;
  std::size_t initial_decimal_edges = 0;
  std::vector<IterationRecord> steps;
};

struct IntegerizeResult {
  WeightedDigraph graph;
  IntegerizeReport report;
};

/// Called after every cycle shift with the weights before and after it.
using StepObserver = std::function<void(std::span<const Rational> before,
                                        std::span<const Rational> after,
                                        const CycleShift& shift)>;

/// Rewrites the weights of a balanced digraph with integer vertex weights
/// into nonnegative integers with the same vertex weights, by repeated cycle
/// shifts until no decimal edge is left.
///
/// Throws NotBalanced or NonIntegerVertexWeight when the hypothesis fails.
/// Strong connectivity is not required.
IntegerizeResult integerize(const WeightedDigraph& g,
                            const StepObserver& observer = {});

enum class Classification { NoDecimalEdge, HasCompletelyDecimalCycle };

/// Which side of the dichotomy (b, w) is on: no decimal edge at all, or a
/// completely decimal cycle exists. Verifies that w is balanced with vertex
/// weights u and that u is integral first.
Classification classify(const BipartiteGraph& b, std::span<const Rational> w,
                        const VertexWeights& u);

}  // namespace intbalance
