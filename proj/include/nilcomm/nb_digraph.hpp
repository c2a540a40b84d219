#ifndef NILCOMM_NB_DIGRAPH_HPP
#define NILCOMM_NB_DIGRAPH_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "nilcomm/commutant.hpp"
#include "nilcomm/digraph.hpp"
#include "nilcomm/partition.hpp"

namespace nilcomm {

/// Vertex (x, y): position y of Jordan block x, both 1-based.
struct BlockVertex {
  int x = 1;
  int y = 1;

  friend auto operator<=>(const BlockVertex&, const BlockVertex&) = default;
  std::string to_string() const;
};

using BlockEdge = std::pair<BlockVertex, BlockVertex>;

/// Flat 1-based index: mu_1 + ... + mu_{x-1} + y.
int vertex_index(const Partition& mu, const BlockVertex& v);
BlockVertex block_vertex(const Partition& mu, int index);

/// "(x,y)" label for every flat vertex, in index order.
std::vector<std::string> vertex_labels(const Partition& mu);

/// Edges ((x,p), (y,p+d)) for p = 1..min(mu_x,mu_y)-k, d = diagonal_offset.
std::vector<BlockEdge> edge_family(const Partition& mu, const ToeplitzParam& param);

/// Same source block, same target block, and equal position shift.
bool parallel(const BlockEdge& a, const BlockEdge& b);

/// The parameter whose edge family contains (from, to). Throws
/// std::invalid_argument if no admissible parameter does.
ToeplitzParam edge_parameter(const Partition& mu, const BlockVertex& from, const BlockVertex& to);

/// Union of the edge families of `params`, on flat vertex labels.
AcyclicDigraph build(const Partition& mu, const std::vector<ToeplitzParam>& params);
AcyclicDigraph build(const CommutantPattern& pattern);

/// The canonical long path that starts down the first column through
/// blocks 1..k, sweeps blocks k..w column by column, and climbs back
/// through the last positions of blocks above k.
struct BPathReport {
  int k = 1;
  int w = 1;
  int z = 1;
  int width = 1;
  std::vector<BlockVertex> block_set;  // V_{B,k}, sorted
  std::vector<BlockVertex> vertices;   // path order
  int length = 0;

  /// Vertices listed as the first column segment, then the sweep set sorted,
  /// then the climb set sorted, without repeats.
  std::vector<BlockVertex> table_vertices() const;
  /// Consecutive path edges as Toeplitz parameters (deduplicated, sorted).
  std::vector<ToeplitzParam> parameters(const Partition& mu) const;
};

/// Throws std::domain_error unless mu_{k-1} > mu_k (mu_0 = mu_1 + 1).
BPathReport b_path(const Partition& mu, int k);

/// Admissible pattern whose digraph has a B-path of length
/// max_nilpotency_index(mu), for the smallest maximizing start block.
CommutantPattern witness_pattern(const Partition& mu);

}  // namespace nilcomm

#endif  // NILCOMM_NB_DIGRAPH_HPP
