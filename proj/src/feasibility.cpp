#include "intbalance/feasibility.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "intbalance/errors.hpp"

namespace intbalance {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Residual network with paired arcs: arc a and a ^ 1 are mutual reverses.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, Rational capacity) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({to, std::move(capacity), Rational()});
    adj_[from].push_back(id);
    arcs_.push_back({from, Rational(), Rational()});
    adj_[to].push_back(id + 1);
    return id;
  }

  const Rational& flow(std::size_t arc) const { return arcs_[arc].flow; }

  Rational max_flow(std::size_t source, std::size_t sink) {
    Rational total;
    while (true) {
      const auto parent = bfs(source);
      if (parent[sink] == kNone) return total;
      Rational bottleneck;
      bool first = true;
      for (std::size_t v = sink; v != source; v = arcs_[parent[v] ^ 1].to) {
        Rational r = residual(parent[v]);
        if (first || r < bottleneck) bottleneck = std::move(r);
        first = false;
      }
      for (std::size_t v = sink; v != source; v = arcs_[parent[v] ^ 1].to) {
        arcs_[parent[v]].flow += bottleneck;
        arcs_[parent[v] ^ 1].flow -= bottleneck;
      }
      total += bottleneck;
    }
  }

  /// Nodes reachable from `source` in the residual network.
  std::vector<bool> reachable(std::size_t source) const {
    const auto parent = bfs(source);
    std::vector<bool> out(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      out[v] = v == source || parent[v] != kNone;
    }
    return out;
  }

 private:
  struct Arc {
    std::size_t to;
    Rational capacity;
    Rational flow;
  };

  Rational residual(std::size_t arc) const {
    return arcs_[arc].capacity - arcs_[arc].flow;
  }

  // parent[v] = arc used to reach v, kNone if unreached.
  std::vector<std::size_t> bfs(std::size_t source) const {
    std::vector<std::size_t> parent(adj_.size(), kNone);
    std::vector<bool> seen(adj_.size(), false);
    std::deque<std::size_t> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t a : adj_[v]) {
        const std::size_t to = arcs_[a].to;
        if (seen[to] || residual(a).sign() <= 0) continue;
        seen[to] = true;
        parent[to] = a;
        queue.push_back(to);
      }
    }
    return parent;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-enough draw in [lo, hi]; written out so results do not depend on
  // the standard library's distribution implementations.
  std::uint64_t draw(std::uint64_t lo, std::uint64_t hi) {
    return lo + engine_() % (hi - lo + 1);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[draw(0, i - 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Edge ids of a shortest path from `from` to `to`; empty when from == to.
std::vector<EdgeId> shortest_path(const Digraph& g, Vertex from, Vertex to) {
  std::vector<EdgeId> via(g.vertex_count(), kNone);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(v)) {
      const Vertex h = g.edge(e).head;
      if (seen[h]) continue;
      seen[h] = true;
      via[h] = e;
      queue.push_back(h);
    }
  }
  std::vector<EdgeId> path;
  for (Vertex v = to; v != from; v = g.edge(via[v]).tail) path.push_back(via[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Edges of B whose endpoints both survive repeated removal of vertices of
// degree <= 1. Every cycle of B lies in this set.
std::vector<bool> two_core_edges(const BipartiteGraph& b) {
  const std::size_t n = b.side_size();
  auto id = [n](BipartiteVertex v) {
    return v.side == Side::X ? v.index : n + v.index;
  };
  std::vector<std::size_t> degree(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = b.incident({Side::X, i}).size();
    degree[n + i] = b.incident({Side::Y, i}).size();
  }
  std::vector<bool> alive(b.edge_count(), true);
  std::vector<bool> removed(2 * n, false);
  std::vector<BipartiteVertex> stack;
  for (std::size_t i = 0; i < n; ++i) {
    for (Side s : {Side::X, Side::Y}) {
      if (degree[id({s, i})] <= 1) stack.push_back({s, i});
    }
  }
  while (!stack.empty()) {
    const BipartiteVertex v = stack.back();
    stack.pop_back();
    if (removed[id(v)]) continue;
    removed[id(v)] = true;
    for (EdgeId k : b.incident(v)) {
      if (!alive[k]) continue;
      alive[k] = false;
      const BipartiteVertex o = b.other_end(k, v);
      if (--degree[id(o)] <= 1 && !removed[id(o)]) stack.push_back(o);
    }
  }
  return alive;
}

// Random non-backtracking walk on the 2-core of B until a vertex repeats.
// Returns the closed alternating cycle, entered at an x-vertex.
DecimalCycle random_alternating_cycle(const BipartiteGraph& b,
                                      const std::vector<bool>& core,
                                      Rng& rng) {
  std::vector<std::size_t> core_edges;
  for (EdgeId k = 0; k < core.size(); ++k) {
    if (core[k]) core_edges.push_back(k);
  }
  const EdgeId first = core_edges[rng.draw(0, core_edges.size() - 1)];
  const std::size_t n = b.side_size();
  std::vector<std::size_t> seen(2 * n, kNone);
  auto id = [n](BipartiteVertex v) {
    return v.side == Side::X ? v.index : n + v.index;
  };

  BipartiteVertex at{Side::X, b.edge(first).tail};
  seen[id(at)] = 0;
  std::vector<EdgeId> steps;
  EdgeId arrival = kNone;
  EdgeId next = first;
  while (true) {
    steps.push_back(next);
    arrival = next;
    at = b.other_end(next, at);
    if (const std::size_t p = seen[id(at)]; p != kNone) {
      std::vector<EdgeId> cycle(steps.begin() + static_cast<std::ptrdiff_t>(p),
                                steps.end());
      if (at.side == Side::X) return DecimalCycle(b, at.index, std::move(cycle));
      const BipartiteVertex x = b.other_end(cycle.front(), at);
      std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
      return DecimalCycle(b, x.index, std::move(cycle));
    }
    seen[id(at)] = steps.size();
    std::vector<EdgeId> options;
    for (EdgeId k : b.incident(at)) {
      if (core[k] && k != arrival) options.push_back(k);
    }
    next = options[rng.draw(0, options.size() - 1)];
  }
}

}  // namespace

TransportationInstance::TransportationInstance(const Digraph& g,
                                               const VertexWeights& u)
    : lift(BipartiteGraph::lift(g)), supply(u.values()), demand(u.values()) {
  if (u.size() != g.vertex_count()) {
    throw GraphError("expected " + std::to_string(g.vertex_count()) +
                     " vertex weights, got " + std::to_string(u.size()));
  }
}

Rational TransportationInstance::total_supply() const {
  Rational s;
  for (const auto& v : supply) s += v;
  return s;
}

Rational TransportationInstance::total_demand() const {
  Rational s;
  for (const auto& v : demand) s += v;
  return s;
}

std::vector<Rational> solve_feasible_w(const Digraph& g,
                                       const VertexWeights& u) {
  const TransportationInstance inst(g, u);
  const std::size_t n = g.vertex_count();
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  const Rational total = inst.total_supply();

  FlowNetwork net(2 * n + 2);
  for (std::size_t i = 0; i < n; ++i) net.add_arc(source, i, inst.supply[i]);
  std::vector<std::size_t> edge_arc(g.edge_count());
  for (EdgeId k = 0; k < g.edge_count(); ++k) {
    const Edge& e = inst.lift.edge(k);
    edge_arc[k] = net.add_arc(e.tail, n + e.head, total);
  }
  for (std::size_t j = 0; j < n; ++j) net.add_arc(n + j, sink, inst.demand[j]);

  if (net.max_flow(source, sink) != inst.total_demand()) {
    const auto reach = net.reachable(source);
    InfeasibilityCut cut;
    Rational supply, capacity;
    for (std::size_t i = 0; i < n; ++i) {
      if (reach[i]) {
        cut.sources.push_back(i);
        supply += u[i];
      }
      if (reach[n + i]) {
        cut.targets.push_back(i);
        capacity += u[i];
      }
    }
    cut.supply = supply.to_string();
    cut.capacity = capacity.to_string();
    throw Infeasible(std::move(cut));
  }

  std::vector<Rational> w;
  w.reserve(g.edge_count());
  for (EdgeId k = 0; k < g.edge_count(); ++k) w.push_back(net.flow(edge_arc[k]));
  return w;
}

WeightedDigraph generate_balanced_instance(const Digraph& g, std::uint64_t seed,
                                           const GeneratorParams& params) {
  if (g.vertex_count() == 0 || !is_strongly_connected(g)) {
    throw GraphError("instance generator needs a strongly connected digraph");
  }
  if (params.max_weight < 1) throw GraphError("max_weight must be >= 1");
  Rng rng(seed);

  std::vector<Rational> w(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Rational c(static_cast<std::int64_t>(
        rng.draw(1, static_cast<std::uint64_t>(params.max_weight))));
    w[e] += c;
    for (EdgeId back : shortest_path(g, g.edge(e).head, g.edge(e).tail)) {
      w[back] += c;
    }
  }

  if (params.max_denominator >= 2) {
    const BipartiteGraph b = BipartiteGraph::lift(g);
    const auto core = two_core_edges(b);
    if (std::find(core.begin(), core.end(), true) != core.end()) {
      const auto d = static_cast<std::int64_t>(
          rng.draw(2, static_cast<std::uint64_t>(params.max_denominator)));
      const std::size_t shifts =
          params.shifts ? params.shifts : g.edge_count() / 4 + 1;
      // Shift a random alternating cycle by +-q/d. The parity that loses
      // q/d is random; the other one is tried if that would go negative,
      // otherwise the cycle is skipped.
      auto try_shift = [&] {
        const DecimalCycle c = random_alternating_cycle(b, core, rng);
        const Rational delta(
            static_cast<std::int64_t>(rng.draw(1, static_cast<std::uint64_t>(d - 1))),
            d);
        const std::size_t first_parity = rng.draw(0, 1);
        for (std::size_t attempt = 0; attempt < 2; ++attempt) {
          const std::size_t minus = (first_parity + attempt) % 2;
          bool ok = true;
          for (std::size_t pos = minus; pos < c.length(); pos += 2) {
            if (w[c.edges()[pos]] < delta) ok = false;
          }
          if (!ok) continue;
          for (std::size_t pos = 0; pos < c.length(); ++pos) {
            if (pos % 2 == minus) {
              w[c.edges()[pos]] -= delta;
            } else {
              w[c.edges()[pos]] += delta;
            }
          }
          return;
        }
      };
      for (std::size_t s = 0; s < shifts; ++s) try_shift();
      // Shifts can cancel each other out; top up until something is decimal.
      for (int extra = 0; extra < 64 && count_decimal_edges(w) == 0; ++extra) {
        try_shift();
      }
    }
  }

  WeightedDigraph out(g, std::move(w));
  const VertexWeights u = check_balanced(out);
  if (!u.is_integral()) {
    throw InvariantViolation("generated instance has non-integer vertex weights");
  }
  return out;
}

Digraph random_strongly_connected_digraph(std::size_t n, std::size_t m,
                                          std::uint64_t seed) {
  if (n == 0) throw GraphError("need at least one vertex");
  if (m < n || m > n * n) {
    throw GraphError("edge count must lie in [n, n*n]");
  }
  Rng rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);

  std::vector<bool> used(n * n, false);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const Edge e{order[i], order[(i + 1) % n]};
    used[e.tail * n + e.head] = true;
    edges.push_back(e);
  }
  std::vector<std::size_t> rest;
  for (std::size_t key = 0; key < n * n; ++key) {
    if (!used[key]) rest.push_back(key);
  }
  rng.shuffle(rest);
  for (std::size_t i = 0; edges.size() < m; ++i) {
    edges.push_back({rest[i] / n, rest[i] % n});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  return Digraph(n, std::move(edges));
}

WeightedDigraph canonical_two_cycle_instance() {
  Digraph g(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  return WeightedDigraph(std::move(g), std::vector<Rational>(4, Rational(1, 2)));
}

}  // namespace intbalance
