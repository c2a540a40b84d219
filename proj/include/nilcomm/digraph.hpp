#ifndef NILCOMM_DIGRAPH_HPP
#define NILCOMM_DIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nilcomm/field_matrix.hpp"
#include "nilcomm/partition.hpp"

namespace nilcomm {

using Edge = std::pair<int, int>;

/// Vertex-labelled DAG on 1..n. Path lengths throughout count vertices, so a
/// single vertex is a path of length 1.
class AcyclicDigraph {
 public:
  /// Duplicate edges collapse. Throws std::invalid_argument on an
  /// out-of-range label, a self-loop or a directed cycle.
  AcyclicDigraph(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(int u, int v) const;
  /// Successors of v (1-based).
  const std::vector<int>& out(int v) const { return out_[static_cast<std::size_t>(v)]; }
  /// 1-based vertices in a topological order.
  const std::vector<int>& topological_order() const noexcept { return order_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<int> order_;
};

/// Edge (i, j) for every nonzero (i; j) of a square 0/1 (or any integer)
/// matrix. Throws std::invalid_argument("pattern not nilpotent-generic") if
/// the support has a cycle.
AcyclicDigraph from_pattern(const std::vector<std::vector<int>>& support);

/// dhat[0] = 0, dhat[k] = largest vertex count of a union of at most k
/// vertex-disjoint paths, up to the first k with dhat[k] = n.
struct DeltaSequence {
  std::vector<int> dhat;
  std::vector<int> delta;  // delta[k-1] = dhat[k] - dhat[k-1]

  Partition as_partition() const { return Partition(delta); }
};

/// Maximum number of vertices covered by at most k vertex-disjoint paths,
/// via min-cost flow on the vertex-split network.
int d_hat(const AcyclicDigraph& g, int k);

DeltaSequence delta_sequence(const AcyclicDigraph& g);

/// Vertex count of a longest directed path.
int longest_path(const AcyclicDigraph& g);

struct GansnerSaksReport {
  bool agree = false;      // some trial's Jordan shape equals the delta sequence
  Partition shape;         // shape of the first agreeing trial, else of the last trial
  Partition delta;
  int trials = 0;
  int matching_trials = 0;
  int violations = 0;      // trials whose shape is not dominated by delta (always a bug)
};

/// Instantiates `trials` matrices supported exactly on the edges of g with
/// uniform nonzero values over `field` and compares their Jordan shapes with
/// delta_sequence(g).
GansnerSaksReport verify_gansner_saks(const AcyclicDigraph& g, PrimeField field, int trials,
                                      std::uint64_t seed, int jobs = 1);

/// "n" on the first line, then one "u v" edge per line (1-based). '#'
/// comments and blank lines are ignored.
AcyclicDigraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const AcyclicDigraph& g);

/// Graphviz rendering; `labels[v-1]` replaces the numeric label when given.
std::string to_dot(const AcyclicDigraph& g, const std::vector<std::string>& labels = {});

}  // namespace nilcomm

#endif  // NILCOMM_DIGRAPH_HPP
