#include "intbalance/graph_file.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace intbalance {
namespace {

constexpr std::size_t kMaxVertices = 10'000'000;

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::size_t parse_index(const std::string& token, std::size_t line,
                        const char* what) {
  if (token.empty() || token.size() > 18) {
    throw ParseError(line, std::string("bad ") + what + " '" + token + "'");
  }
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(line, std::string("bad ") + what + " '" + token + "'");
    }
  }
  return std::stoull(token);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(line ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

WeightedDigraph read_graph_file(std::istream& in) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  std::unordered_set<std::size_t> seen;

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto t = tokens(line);
    if (t.empty() || t.front().front() == '#') continue;

    if (!have_header) {
      if (t.size() != 2) throw ParseError(line_no, "expected header 'n m'");
      n = parse_index(t[0], line_no, "vertex count");
      m = parse_index(t[1], line_no, "edge count");
      if (n > kMaxVertices) {
        throw ParseError(line_no, "vertex count exceeds " +
                                      std::to_string(kMaxVertices));
      }
      have_header = true;
      continue;
    }
    if (edges.size() == m) {
      throw ParseError(line_no, "more than " + std::to_string(m) + " edge lines");
    }
    if (t.size() != 3) {
      throw ParseError(line_no, "expected 'tail head weight'");
    }
    const std::size_t tail = parse_index(t[0], line_no, "tail");
    const std::size_t head = parse_index(t[1], line_no, "head");
    if (tail >= n || head >= n) {
      throw ParseError(line_no, "vertex index out of range [0," +
                                    std::to_string(n) + ")");
    }
    if (!seen.insert(tail * n + head).second) {
      throw ParseError(line_no, "duplicate edge " + t[0] + " " + t[1]);
    }
    Rational w;
    try {
      w = Rational::parse(t[2]);
    } catch (const RationalParseError& e) {
      throw ParseError(line_no, e.what());
    }
    if (w.is_negative()) {
      throw ParseError(line_no, "negative weight " + t[2]);
    }
    edges.push_back({tail, head});
    weights.push_back(std::move(w));
  }

  if (!have_header) throw ParseError(0, "missing header 'n m'");
  if (edges.size() != m) {
    throw ParseError(0, "expected " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return WeightedDigraph(Digraph(n, std::move(edges)), std::move(weights));
}

WeightedDigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_graph_file(in);
}

void write_graph_file(std::ostream& out, const WeightedDigraph& g) {
  out << g.graph().vertex_count() << ' ' << g.graph().edge_count() << '\n';
  for (EdgeId e = 0; e < g.graph().edge_count(); ++e) {
    const Edge& edge = g.graph().edge(e);
    out << edge.tail << ' ' << edge.head << ' ' << g.weight(e) << '\n';
  }
}

}  // namespace intbalance
