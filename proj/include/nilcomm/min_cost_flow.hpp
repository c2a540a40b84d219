#ifndef NILCOMM_MIN_COST_FLOW_HPP
#define NILCOMM_MIN_COST_FLOW_HPP

#include <optional>
#include <vector>

namespace nilcomm {

/// Successive-shortest-path min-cost flow with integer capacities and costs.
///
/// The network may carry negative arc costs but must be acyclic when
/// start() is called; initial potentials come from a shortest-path pass in
/// topological order, after which every augmentation runs Dijkstra on
/// reduced costs. Each call to augment() pushes one unit along a cheapest
/// residual source-sink path, so the returned costs are nondecreasing.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes);

  /// Returns the arc id.
  int add_arc(int from, int to, int capacity, long long cost);

  /// Computes initial potentials. Throws std::logic_error on a cyclic network.
  void start(int source, int sink);

  /// Cost of the augmenting unit, or nullopt once the sink is unreachable.
  std::optional<long long> augment();

  int flow_on(int arc) const { return arcs_[static_cast<std::size_t>(arc)].flow; }
  int node_count() const noexcept { return static_cast<int>(head_.size()); }

 private:
  struct Arc {
    int to;
    int next;
    int capacity;
    int flow;
    long long cost;
  };

  int residual(int arc) const {
    return arcs_[static_cast<std::size_t>(arc)].capacity - arcs_[static_cast<std::size_t>(arc)].flow;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<long long> potential_;
  int source_ = -1;
  int sink_ = -1;
};

}  // namespace nilcomm

#endif  // NILCOMM_MIN_COST_FLOW_HPP
