#include "nilcomm/min_cost_flow.hpp"

#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace nilcomm {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

MinCostFlow::MinCostFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

int MinCostFlow::add_arc(int from, int to, int capacity, long long cost) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, head_[static_cast<std::size_t>(from)], capacity, 0, cost});
  head_[static_cast<std::size_t>(from)] = id;
  arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0, 0, -cost});
  head_[static_cast<std::size_t>(to)] = id + 1;
  return id;
}

void MinCostFlow::start(int source, int sink) {
  source_ = source;
  sink_ = sink;
  const auto n = head_.size();

  // Kahn's order over arcs with spare capacity.
  std::vector<int> indegree(n, 0);
  for (std::size_t e = 0; e < arcs_.size(); ++e) {
    if (residual(static_cast<int>(e)) > 0) ++indegree[static_cast<std::size_t>(arcs_[e].to)];
  }
  std::vector<int> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) order.push_back(static_cast<int>(v));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int e = head_[static_cast<std::size_t>(order[i])]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
      if (residual(e) <= 0) continue;
      if (--indegree[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(e)].to)] == 0) {
        order.push_back(arcs_[static_cast<std::size_t>(e)].to);
      }
    }
  }
  if (order.size() != n) throw std::logic_error("min-cost flow network is not acyclic");

  potential_.assign(n, kInf);
  potential_[static_cast<std::size_t>(source)] = 0;
  for (int v : order) {
    const long long dv = potential_[static_cast<std::size_t>(v)];
    if (dv == kInf) continue;
    for (int e = head_[static_cast<std::size_t>(v)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
      if (residual(e) <= 0) continue;
      auto& dw = potential_[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(e)].to)];
      dw = std::min(dw, dv + arcs_[static_cast<std::size_t>(e)].cost);
    }
  }
  // Nodes unreachable from the source never enter a shortest path.
  for (auto& p : potential_) {
    if (p == kInf) p = 0;
  }
}

std::optional<long long> MinCostFlow::augment() {
  if (source_ < 0) throw std::logic_error("MinCostFlow::augment before start");
  const auto n = head_.size();
  std::vector<long long> dist(n, kInf);
  std::vector<int> via(n, -1);
  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[static_cast<std::size_t>(source_)] = 0;
  queue.emplace(0, source_);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[static_cast<std::size_t>(v)]) continue;
    for (int e = head_[static_cast<std::size_t>(v)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
      if (residual(e) <= 0) continue;
      const int w = arcs_[static_cast<std::size_t>(e)].to;
      const long long reduced = arcs_[static_cast<std::size_t>(e)].cost +
                                potential_[static_cast<std::size_t>(v)] -
                                potential_[static_cast<std::size_t>(w)];
      const long long nd = d + reduced;
      if (nd < dist[static_cast<std::size_t>(w)]) {
        dist[static_cast<std::size_t>(w)] = nd;
        via[static_cast<std::size_t>(w)] = e;
        queue.emplace(nd, w);
      }
    }
  }
  if (dist[static_cast<std::size_t>(sink_)] == kInf) return std::nullopt;

  for (std::size_t v = 0; v < n; ++v) {
    if (dist[v] != kInf) potential_[v] += dist[v];
  }
  long long cost = 0;
  for (int v = sink_; v != source_;) {
    const int e = via[static_cast<std::size_t>(v)];
    arcs_[static_cast<std::size_t>(e)].flow += 1;
    arcs_[static_cast<std::size_t>(e ^ 1)].flow -= 1;
    cost += arcs_[static_cast<std::size_t>(e)].cost;
    v = arcs_[static_cast<std::size_t>(e ^ 1)].to;
  }
  return cost;
}

}  // namespace nilcomm
