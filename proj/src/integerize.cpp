#include "intbalance/integerize.hpp"

#include <string>
#include <utility>

#include "intbalance/errors.hpp"

namespace intbalance {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::optional<EdgeId> lowest_decimal_edge(const BipartiteGraph& b,
                                          std::span<const Rational> w,
                                          BipartiteVertex v, EdgeId skip) {
  for (EdgeId k : b.incident(v)) {
    if (k != skip && is_decimal(w[k])) return k;
  }
  return std::nullopt;
}

std::string name(BipartiteVertex v) {
  return (v.side == Side::X ? "x" : "y") + std::to_string(v.index);
}

}  // namespace

std::optional<DecimalCycle> find_completely_decimal_cycle(
    const BipartiteGraph& b, std::span<const Rational> w) {
  if (w.size() != b.edge_count()) {
    throw GraphError("weight vector does not match the graph");
  }
  std::optional<BipartiteVertex> start;
  for (std::size_t i = 0; i < b.side_size() && !start; ++i) {
    if (lowest_decimal_edge(b, w, {Side::X, i}, kNone)) start = {Side::X, i};
  }
  if (!start) return std::nullopt;

  // Position of each vertex on the walk, per side.
  std::vector<std::size_t> seen_x(b.side_size(), kNone);
  std::vector<std::size_t> seen_y(b.side_size(), kNone);
  auto seen = [&](BipartiteVertex v) -> std::size_t& {
    return v.side == Side::X ? seen_x[v.index] : seen_y[v.index];
  };

  std::vector<BipartiteVertex> walk{*start};
  std::vector<EdgeId> steps;
  seen(*start) = 0;
  EdgeId arrival = kNone;
  while (true) {
    const BipartiteVertex at = walk.back();
    const auto next = lowest_decimal_edge(b, w, at, arrival);
    if (!next) {
      throw InvariantViolation("vertex " + name(at) +
                               " meets exactly one decimal edge");
    }
    const BipartiteVertex to = b.other_end(*next, at);
    steps.push_back(*next);
    arrival = *next;
    if (const std::size_t first = seen(to); first != kNone) {
      std::vector<EdgeId> cycle(steps.begin() + static_cast<std::ptrdiff_t>(first),
                                steps.end());
      if (to.side == Side::X) return DecimalCycle(b, to.index, std::move(cycle));
      // Closed at a y-vertex: enter at the x-vertex that follows it.
      const BipartiteVertex x = b.other_end(cycle.front(), to);
      std::vector<EdgeId> rotated(cycle.begin() + 1, cycle.end());
      rotated.push_back(cycle.front());
      return DecimalCycle(b, x.index, std::move(rotated));
    }
    seen(to) = walk.size();
    walk.push_back(to);
  }
}

CycleShift cycle_shift(const BipartiteGraph& b, std::span<const Rational> w,
                       const DecimalCycle& c) {
  if (w.size() != b.edge_count()) {
    throw GraphError("weight vector does not match the graph");
  }
  std::size_t argmin = kNone;
  Rational epsilon;
  for (std::size_t pos = 0; pos < c.length(); ++pos) {
    const EdgeId k = c.edges()[pos];
    if (!is_decimal(w[k])) throw NotCompletelyDecimal(k);
    Rational part = decimal_part(w[k]);
    if (argmin == kNone || part < epsilon) {
      argmin = pos;
      epsilon = std::move(part);
    }
  }

  DecimalCycle oriented = DecimalCycle::is_odd_position(argmin)
                              ? c.rotated(b, argmin)
                              : c.reversed_from(b, argmin);

  std::vector<Rational> out(w.begin(), w.end());
  for (std::size_t pos = 0; pos < oriented.length(); ++pos) {
    Rational& weight = out[oriented.edges()[pos]];
    if (DecimalCycle::is_odd_position(pos)) {
      weight -= epsilon;
      if (weight.is_negative()) {
        throw InvariantViolation("cycle shift produced a negative weight");
      }
    } else {
      weight += epsilon;
    }
  }
  return CycleShift{std::move(out), std::move(epsilon), std::move(oriented)};
}

IntegerizeResult integerize(const WeightedDigraph& g,
                            const StepObserver& observer) {
  const VertexWeights u = check_balanced(g);
  if (const auto v = u.first_non_integer()) {
    throw NonIntegerVertexWeight(*v, u[*v].to_string());
  }

  const BipartiteGraph b = BipartiteGraph::lift(g.graph());
  std::vector<Rational> w = g.weights();
  IntegerizeReport report;
  report.initial_decimal_edges = count_decimal_edges(w);

  std::size_t remaining = report.initial_decimal_edges;
  while (auto cycle = find_completely_decimal_cycle(b, w)) {
    CycleShift shift = cycle_shift(b, w, *cycle);
    const std::size_t after = count_decimal_edges(shift.weights);
    if (after >= remaining) {
      throw InvariantViolation("cycle shift did not retire a decimal edge");
    }
    report.steps.push_back(
        {cycle->length(), shift.epsilon, remaining - after, after});
    if (observer) observer(w, shift.weights, shift);
    w = std::move(shift.weights);
    remaining = after;
  }
  report.iterations = report.steps.size();
  return {g.with_weights(std::move(w)), std::move(report)};
}

Classification classify(const BipartiteGraph& b, std::span<const Rational> w,
                        const VertexWeights& u) {
  if (check_balanced_bipartite(b, w) != u) {
    throw InvariantViolation("weights do not realise the given vertex weights");
  }
  if (const auto v = u.first_non_integer()) {
    throw NonIntegerVertexWeight(*v, u[*v].to_string());
  }
  if (count_decimal_edges(w) == 0) return Classification::NoDecimalEdge;
  if (!find_completely_decimal_cycle(b, w)) {
    throw InvariantViolation("decimal edge present but no decimal cycle");
  }
  return Classification::HasCompletelyDecimalCycle;
}

}  // namespace intbalance
