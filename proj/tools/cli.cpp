#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "intbalance/bipartite.hpp"
#include "intbalance/digraph.hpp"
#include "intbalance/feasibility.hpp"
#include "intbalance/graph_file.hpp"
#include "intbalance/integerize.hpp"

namespace intbalance::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

WeightedDigraph load(const std::string& path) {
  if (path == "-") return read_graph_file(std::cin);
  return read_graph_file(path);
}

// Writes to `path`, or to `out` when path is empty or "-".
void store(const WeightedDigraph& g, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    write_graph_file(out, g);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  write_graph_file(file, g);
}

std::size_t parse_count(const std::string& s) {
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw UsageError("bad number '" + s + "'");
  }
}

Digraph sorted_digraph(std::size_t n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Digraph(n, std::move(edges));
}

// Built-in graph names: cycleN, bicycleN, completeN, canonical,
// bidirected-triangle, random:N:M. Anything else is read as a graph file
// whose weights are ignored.
Digraph resolve_graph(const std::string& spec, std::uint64_t seed) {
  std::smatch m;
  static const std::regex named(R"((cycle|bicycle|complete)(\d+))");
  static const std::regex random(R"(random:(\d+):(\d+))");
  if (spec == "canonical") return canonical_two_cycle_instance().graph();
  if (spec == "bidirected-triangle") return resolve_graph("bicycle3", seed);
  if (std::regex_match(spec, m, random)) {
    return random_strongly_connected_digraph(parse_count(m[1]),
                                             parse_count(m[2]), seed);
  }
  if (std::regex_match(spec, m, named)) {
    const std::size_t n = parse_count(m[2]);
    if (n == 0) throw UsageError("graph needs at least one vertex");
    std::vector<Edge> edges;
    if (m[1] == "complete") {
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) edges.push_back({i, j});
    } else {
      for (Vertex i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        if (m[1] == "bicycle") edges.push_back({(i + 1) % n, i});
      }
    }
    return sorted_digraph(n, std::move(edges));
  }
  return load(spec).graph();
}

std::vector<Rational> parse_u(const std::string& list) {
  std::vector<Rational> u;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      u.push_back(Rational::parse(item));
    } catch (const RationalParseError& e) {
      throw UsageError(std::string("--u: ") + e.what());
    }
    if (u.back().is_negative()) throw UsageError("--u: negative entry " + item);
  }
  return u;
}

std::string u_entry(Vertex v, const Rational& r) {
  return "u[" + std::to_string(v) + "] = " + r.to_string();
}

int cmd_check(const std::string& input, std::ostream& out, std::ostream& err) {
  const WeightedDigraph g = load(input);
  const auto components = strongly_connected_components(g.graph());
  out << "vertices: " << g.graph().vertex_count() << '\n'
      << "edges: " << g.graph().edge_count() << '\n'
      << "strongly connected components: " << components.size() << '\n';
  VertexWeights u;
  try {
    u = check_balanced(g);
  } catch (const NotBalanced& e) {
    out << "balanced: no\n";
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  out << "balanced: yes\n";
  for (Vertex v = 0; v < u.size(); ++v) out << u_entry(v, u[v]) << '\n';
  out << "u integral: " << (u.is_integral() ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_integerize(const std::string& input, const std::string& output,
                   const CLI::Option* report_opt, const std::string& report_path,
                   std::ostream& out, std::ostream& err) {
  const WeightedDigraph g = load(input);
  const IntegerizeResult result = integerize(g);
  store(result.graph, output, out);

  err << "iterations: " << result.report.iterations
      << " (initial decimal edges: " << result.report.initial_decimal_edges
      << ")\n";
  if (report_opt->count() > 0) {
    std::ofstream file;
    std::ostream* sink = &err;
    if (!report_path.empty() && report_path != "-") {
      file.open(report_path);
      if (!file) throw UsageError("cannot write '" + report_path + "'");
      sink = &file;
    }
    std::size_t iter = 0;
    for (const auto& step : result.report.steps) {
      nlohmann::ordered_json line;
      line["iter"] = ++iter;
      line["cycle_len"] = step.cycle_length;
      line["eps"] = step.epsilon.to_string();
      line["decimal_edges_remaining"] = step.decimal_edges_remaining;
      *sink << line.dump() << '\n';
    }
  }
  return kOk;
}

// Solves feasibility component by component; edges between strongly
// connected components carry zero in any balanced weighting.
std::vector<Rational> feasible_by_component(const Digraph& g,
                                            const VertexWeights& u) {
  std::vector<Rational> w(g.edge_count());
  for (const auto& component : strongly_connected_components(g)) {
    const Subgraph sub = induced_subgraph(g, component);
    std::vector<Rational> local_u;
    for (Vertex v : sub.vertex_map) local_u.push_back(u[v]);
    std::vector<Rational> local_w;
    try {
      local_w = solve_feasible_w(sub.graph, VertexWeights(std::move(local_u)));
    } catch (const Infeasible& e) {
      InfeasibilityCut cut = e.cut();
      for (auto& v : cut.sources) v = sub.vertex_map[v];
      for (auto& v : cut.targets) v = sub.vertex_map[v];
      throw Infeasible(std::move(cut));
    }
    for (EdgeId e = 0; e < local_w.size(); ++e) {
      w[sub.edge_map[e]] = std::move(local_w[e]);
    }
  }
  return w;
}

std::vector<Rational> generate_by_component(const Digraph& g,
                                            std::uint64_t seed,
                                            const GeneratorParams& params) {
  std::vector<Rational> w(g.edge_count());
  std::uint64_t component_seed = seed;
  for (const auto& component : strongly_connected_components(g)) {
    const Subgraph sub = induced_subgraph(g, component);
    const WeightedDigraph local =
        generate_balanced_instance(sub.graph, component_seed++, params);
    for (EdgeId e = 0; e < local.graph().edge_count(); ++e) {
      w[sub.edge_map[e]] = local.weight(e);
    }
  }
  return w;
}

int cmd_synth(const std::string& graph_spec, const std::string& u_list,
              const std::optional<std::uint64_t>& seed,
              const GeneratorParams& params, const std::string& output,
              std::ostream& out) {
  const Digraph g = resolve_graph(graph_spec, seed.value_or(0));
  std::vector<Rational> w;
  if (!u_list.empty()) {
    std::vector<Rational> u = parse_u(u_list);
    if (u.size() != g.vertex_count()) {
      throw UsageError("--u has " + std::to_string(u.size()) +
                       " entries, graph has " +
                       std::to_string(g.vertex_count()) + " vertices");
    }
    w = feasible_by_component(g, VertexWeights(std::move(u)));
  } else if (seed) {
    w = generate_by_component(g, *seed, params);
  } else {
    throw UsageError("synth needs --u or --seed");
  }
  store(WeightedDigraph(g, std::move(w)), output, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Integer rebalancing of weighted digraphs", "intbalance"};
  app.require_subcommand(1);

  std::string input;
  std::string output;

  auto* check = app.add_subcommand("check", "verify balance and print u");
  check->add_option("-i,--input", input, "graph file ('-' for stdin)")
      ->required();

  auto* integ = app.add_subcommand(
      "integerize", "rewrite weights as integers with the same vertex sums");
  std::string report_path;
  integ->add_option("-i,--input", input, "graph file ('-' for stdin)")
      ->required();
  integ->add_option("-o,--output", output, "output file (default stdout)");
  auto* report_opt =
      integ->add_option("--report", report_path,
                        "JSON-lines trace of each cycle shift; stderr unless "
                        "a path is given")
          ->expected(0, 1);

  auto* synth = app.add_subcommand("synth", "emit a balanced instance");
  std::string graph_spec;
  std::string u_list;
  std::uint64_t seed_value = 0;
  GeneratorParams params;
  synth
      ->add_option("--graph", graph_spec,
                   "cycleN, bicycleN, completeN, canonical, "
                   "bidirected-triangle, random:N:M, or a graph file")
      ->required();
  synth->add_option("--u", u_list, "comma-separated vertex weights to realise");
  auto* seed_opt =
      synth->add_option("--seed", seed_value, "seed for a fractional instance");
  synth->add_option("--max-weight", params.max_weight,
                    "largest integer circulation weight");
  synth->add_option("--max-denominator", params.max_denominator,
                    "largest denominator of fractional shifts");
  synth->add_option("-o,--output", output, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*check) return cmd_check(input, out, err);
    if (*integ) {
      return cmd_integerize(input, output, report_opt, report_path, out, err);
    }
    std::optional<std::uint64_t> seed;
    if (seed_opt->count() > 0) seed = seed_value;
    return cmd_synth(graph_spec, u_list, seed, params, output, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Infeasible& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const NotBalanced& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const NonIntegerVertexWeight& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace intbalance::cli
