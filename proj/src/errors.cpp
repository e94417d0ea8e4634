#include "intbalance/errors.hpp"

#include <utility>

namespace intbalance {

NotBalanced::NotBalanced(std::size_t vertex, std::string out_sum,
                         std::string in_sum, Side side)
    : Error("vertex " + std::to_string(vertex) + " is not balanced: out " +
            out_sum + ", in " + in_sum),
      vertex_(vertex),
      out_sum_(std::move(out_sum)),
      in_sum_(std::move(in_sum)),
      side_(side) {}

NonIntegerVertexWeight::NonIntegerVertexWeight(std::size_t vertex,
                                               std::string weight)
    : Error("vertex " + std::to_string(vertex) +
            " has non-integer weight " + weight),
      vertex_(vertex),
      weight_(std::move(weight)) {}

NotCompletelyDecimal::NotCompletelyDecimal(std::size_t edge)
    : Error("cycle edge " + std::to_string(edge) + " has an integer weight"),
      edge_(edge) {}

namespace {

std::string describe(const InfeasibilityCut& cut) {
  std::string s = "infeasible: vertices {";
  for (std::size_t i = 0; i < cut.sources.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cut.sources[i]);
  }
  s += "} must send " + cut.supply + " but their out-neighbours {";
  for (std::size_t i = 0; i < cut.targets.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cut.targets[i]);
  }
  s += "} can take only " + cut.capacity;
  return s;
}

}  // namespace

Infeasible::Infeasible(InfeasibilityCut cut)
    : Error(describe(cut)), cut_(std::move(cut)) {}

}  // namespace intbalance
