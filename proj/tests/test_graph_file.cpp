#include <doctest.h>

#include <sstream>

#include "intbalance/feasibility.hpp"
#include "intbalance/graph_file.hpp"

using namespace intbalance;

namespace {

WeightedDigraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_graph_file(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected ParseError");
  return 0;
}

}  // namespace

TEST_CASE("reads weights in every literal form") {
  const auto g = parse(
      "# canonical instance\n"
      "2 4\n"
      "0 0 0.5\n"
      "\n"
      "0 1 1/2\n"
      "1 0 2/4\n"
      "  1 1   0.50  \n");
  CHECK(g.graph().vertex_count() == 2);
  CHECK(g.weights() == std::vector<Rational>(4, Rational(1, 2)));
  CHECK(g.graph().edge(1) == Edge{0, 1});
}

TEST_CASE("writes canonical fractions") {
  std::ostringstream out;
  write_graph_file(out, parse("2 4\n0 0 0.5\n0 1 3\n1 0 6/4\n1 1 0\n"));
  CHECK(out.str() == "2 4\n0 0 1/2\n0 1 3\n1 0 3/2\n1 1 0\n");
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("2\n") == 1);
  CHECK(error_line("# c\n2 1\n0 2 1\n") == 3);
  CHECK(error_line("2 2\n0 1 1\n0 1 2\n") == 3);
  CHECK(error_line("2 1\n0 1 -1\n") == 2);
  CHECK(error_line("2 1\n0 1 1e3\n") == 2);
  CHECK(error_line("2 1\n0 1 1/0\n") == 2);
  CHECK(error_line("2 1\n0 1\n") == 2);
  CHECK(error_line("2 1\n0 1 1\n1 0 1\n") == 3);
  CHECK(error_line("2 2\n0 1 1\n") == 0);
  CHECK(error_line("") == 0);
  CHECK(error_line("2 1\nx 1 1\n") == 2);
}

TEST_CASE("output re-parses to the same rationals") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Digraph g = random_strongly_connected_digraph(12, 40, seed);
    const WeightedDigraph inst = generate_balanced_instance(
        g, seed, {.max_weight = 9, .max_denominator = 64});
    std::ostringstream out;
    write_graph_file(out, inst);
    const WeightedDigraph back = parse(out.str());
    CHECK(back.graph().edges() == inst.graph().edges());
    CHECK(back.weights() == inst.weights());
  }
}
