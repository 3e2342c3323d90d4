// Copyright 2026 The blockip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockip/flow.hpp"

#include <optional>
#include <queue>
#include <tuple>

#include "blockip/errors.hpp"

namespace blockip {

namespace {

// Residual graph with paired forward/backward edges (edge e ^ 1 is the
// reverse of e).
struct Residual {
  struct Edge {
    std::size_t to;
    BigInt cap;
    BigInt cost;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> out;

  explicit Residual(std::size_t nodes) : out(nodes) {}

  std::size_t add(std::size_t from, std::size_t to, const BigInt& cap,
                  const BigInt& cost) {
    const std::size_t id = edges.size();
    edges.push_back({to, cap, cost});
    out[from].push_back(id);
    edges.push_back({from, 0, -cost});
    out[to].push_back(id + 1);
    return id;
  }
};

// Bellman-Ford distances from `source` over edges with positive residual
// capacity; unreachable nodes get nullopt.
std::vector<std::optional<BigInt>> bellman_ford(const Residual& g,
                                                std::size_t source) {
  const std::size_t n = g.out.size();
  std::vector<std::optional<BigInt>> dist(n);
  dist[source] = BigInt(0);
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!dist[v]) continue;
      for (std::size_t e : g.out[v]) {
        const auto& edge = g.edges[e];
        if (sgn(edge.cap) <= 0) continue;
        BigInt cand = *dist[v] + edge.cost;
        if (!dist[edge.to] || cand < *dist[edge.to]) {
          dist[edge.to] = std::move(cand);
          changed = true;
        }
      }
    }
    if (!changed) return dist;
  }
  throw PreconditionError("min_cost_flow: negative-cost cycle");
}

}  // namespace

std::size_t FlowNetwork::add_node(const BigInt& node_supply) {
  supply.push_back(node_supply);
  return supply.size() - 1;
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to,
                                 const BigInt& capacity, const BigInt& cost) {
  arcs.push_back({from, to, capacity, cost});
  return arcs.size() - 1;
}

FlowResult min_cost_flow(const FlowNetwork& network) {
  const std::size_t n = network.node_count();
  FlowResult result;
  BigInt balance = 0, total = 0;
  for (const BigInt& s : network.supply) {
    balance += s;
    if (sgn(s) > 0) total += s;
  }
  for (const auto& arc : network.arcs) {
    if (sgn(arc.capacity) < 0) {
      throw PreconditionError("min_cost_flow: negative arc capacity");
    }
    if (arc.from >= n || arc.to >= n) {
      throw PreconditionError("min_cost_flow: arc endpoint out of range");
    }
  }
  if (balance != 0) return result;

  const std::size_t source = n, sink = n + 1;
  Residual g(n + 2);
  std::vector<std::size_t> arc_edge;
  for (const auto& arc : network.arcs) {
    arc_edge.push_back(g.add(arc.from, arc.to, arc.capacity, arc.cost));
  }
  for (std::size_t v = 0; v < n; ++v) {
    const BigInt& s = network.supply[v];
    if (sgn(s) > 0) g.add(source, v, s, 0);
    if (sgn(s) < 0) g.add(v, sink, -s, 0);
  }

  // Potentials keep reduced costs nonnegative; nodes that are unreachable
  // now stay unreachable, so their potential never matters.
  std::vector<BigInt> potential(n + 2);
  {
    auto dist = bellman_ford(g, source);
    for (std::size_t v = 0; v < n + 2; ++v) {
      if (dist[v]) potential[v] = *dist[v];
    }
  }

  BigInt routed = 0;
  while (routed < total) {
    // Dijkstra on reduced costs; ties prefer fewer hops.
    using Key = std::tuple<BigInt, std::size_t, std::size_t>;
    std::vector<std::optional<std::pair<BigInt, std::size_t>>> dist(n + 2);
    std::vector<std::size_t> via(n + 2, static_cast<std::size_t>(-1));
    std::vector<bool> done(n + 2, false);
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> heap;
    dist[source] = std::make_pair(BigInt(0), std::size_t{0});
    heap.emplace(BigInt(0), 0, source);
    while (!heap.empty()) {
      auto [d, hops, v] = heap.top();
      heap.pop();
      if (done[v]) continue;
      done[v] = true;
      for (std::size_t e : g.out[v]) {
        const auto& edge = g.edges[e];
        if (sgn(edge.cap) <= 0 || done[edge.to]) continue;
        BigInt nd = d + edge.cost + potential[v] - potential[edge.to];
        auto cand = std::make_pair(nd, hops + 1);
        if (!dist[edge.to] || cand < *dist[edge.to]) {
          dist[edge.to] = cand;
          via[edge.to] = e;
          heap.emplace(std::move(nd), hops + 1, edge.to);
        }
      }
    }
    if (!dist[sink]) return result;
    for (std::size_t v = 0; v < n + 2; ++v) {
      if (dist[v]) potential[v] += dist[v]->first;
    }
    BigInt push = total - routed;
    for (std::size_t v = sink; v != source; v = g.edges[via[v] ^ 1].to) {
      if (g.edges[via[v]].cap < push) push = g.edges[via[v]].cap;
    }
    for (std::size_t v = sink; v != source; v = g.edges[via[v] ^ 1].to) {
      g.edges[via[v]].cap -= push;
      g.edges[via[v] ^ 1].cap += push;
    }
    routed += push;
    ++result.augmentations;
  }

  result.feasible = true;
  result.cost = 0;
  for (std::size_t a = 0; a < network.arcs.size(); ++a) {
    result.flow.push_back(g.edges[arc_edge[a] ^ 1].cap);
    result.cost += result.flow.back() * network.arcs[a].cost;
  }
  return result;
}

TransportResult solve_transport(const TransportProblem& p) {
  const std::size_t rows = p.row_totals.size();
  const std::size_t cols = p.col_totals.size();
  auto shape_ok = [&](const IntMatrix& m) {
    return m.rows() == rows && m.cols() == cols;
  };
  if (!shape_ok(p.cell_lower) || !shape_ok(p.cell_upper) ||
      !shape_ok(p.cell_profit)) {
    throw DimensionMismatch("solve_transport: cell matrices must be rows x cols");
  }
  TransportResult result;

  // Send every lower bound up front and route the remainder.
  IntVector row_rest = p.row_totals;
  IntVector col_rest = p.col_totals;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t h = 0; h < cols; ++h) {
      if (p.cell_lower(i, h) > p.cell_upper(i, h)) return result;
      row_rest[i] -= p.cell_lower(i, h);
      col_rest[h] -= p.cell_lower(i, h);
    }
  }
  for (const BigInt& r : row_rest) {
    if (sgn(r) < 0) return result;
  }
  for (const BigInt& c : col_rest) {
    if (sgn(c) < 0) return result;
  }

  FlowNetwork net;
  for (std::size_t i = 0; i < rows; ++i) net.add_node(row_rest[i]);
  for (std::size_t h = 0; h < cols; ++h) net.add_node(-col_rest[h]);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t h = 0; h < cols; ++h) {
      net.add_arc(i, rows + h, p.cell_upper(i, h) - p.cell_lower(i, h),
                  -p.cell_profit(i, h));
    }
  }
  const FlowResult flow = min_cost_flow(net);
  if (!flow.feasible) return result;

  result.feasible = true;
  result.cells = IntMatrix(rows, cols);
  result.objective = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t h = 0; h < cols; ++h) {
      result.cells(i, h) = p.cell_lower(i, h) + flow.flow[i * cols + h];
      result.objective += p.cell_profit(i, h) * result.cells(i, h);
    }
  }
  return result;
}

}  // namespace blockip
