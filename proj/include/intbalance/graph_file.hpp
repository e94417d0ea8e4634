#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "intbalance/digraph.hpp"
#include "intbalance/errors.hpp"

namespace intbalance {

/// Input error in a graph file, with the 1-based line it was found on
/// (0 when the problem is the end of the file).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the text format
///
///     # comments and blank lines are ignored
///     n m
///     tail head weight      (m lines)
///
/// where weight is `INT`, `INT.DIGITS` or `INT/POSINT` and must be >= 0.
WeightedDigraph read_graph_file(std::istream& in);
WeightedDigraph read_graph_file(const std::string& path);

/// Writes the same format with weights in canonical `p/q` (or bare integer)
/// form, so reading the output back yields exactly the same rationals.
void write_graph_file(std::ostream& out, const WeightedDigraph& g);

}  // namespace intbalance
