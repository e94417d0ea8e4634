#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace intbalance {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed structure: bad vertex index, parallel edge, size mismatch.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed rational literal.
class RationalParseError : public Error {
 public:
  using Error::Error;
};

enum class Side { X, Y };

/// A vertex whose outflow differs from its inflow. For digraphs `side` is
/// unused; for the bipartite lift it says which side of the violation was
/// found on.
class NotBalanced : public Error {
 public:
  NotBalanced(std::size_t vertex, std::string out_sum, std::string in_sum,
              Side side = Side::X);

  std::size_t vertex() const { return vertex_; }
  const std::string& out_sum() const { return out_sum_; }
  const std::string& in_sum() const { return in_sum_; }
  Side side() const { return side_; }

 private:
  std::size_t vertex_;
  std::string out_sum_;
  std::string in_sum_;
  Side side_;
};

class NonIntegerVertexWeight : public Error {
 public:
  NonIntegerVertexWeight(std::size_t vertex, std::string weight);

  std::size_t vertex() const { return vertex_; }
  const std::string& weight() const { return weight_; }

 private:
  std::size_t vertex_;
  std::string weight_;
};

/// Internal state contradicts a proven property (e.g. a vertex meeting
/// exactly one decimal edge while vertex weights are integral).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class NotCompletelyDecimal : public Error {
 public:
  explicit NotCompletelyDecimal(std::size_t edge);
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

/// Certificate that a vertex-weight vector admits no balanced weighting:
/// the tails in `sources` must push `supply` units out, but their
/// out-neighbours `targets` can absorb only `capacity`.
struct InfeasibilityCut {
  std::vector<std::size_t> sources;
  std::vector<std::size_t> targets;
  std::string supply;
  std::string capacity;
};

class Infeasible : public Error {
 public:
  explicit Infeasible(InfeasibilityCut cut);
  const InfeasibilityCut& cut() const { return cut_; }

 private:
  InfeasibilityCut cut_;
};

}  // namespace intbalance
