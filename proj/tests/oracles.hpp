// Brute-force reference implementations used only by the tests. None of
// these share code paths with the library routine they check.
#ifndef NILCOMM_TESTS_ORACLES_HPP
#define NILCOMM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "nilcomm/commutant.hpp"
#include "nilcomm/digraph.hpp"
#include "nilcomm/field_matrix.hpp"
#include "nilcomm/partition.hpp"

namespace oracle {

/// All partitions of n with exactly t parts, as raw vectors, by recursion on
/// the largest part.
inline std::vector<std::vector<int>> partitions_with_parts(int n, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int, int)> go = [&](int remaining, int slots, int cap) {
    if (slots == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      go(remaining - p, slots - 1, p);
      cur.pop_back();
    }
  };
  go(n, t, n);
  return out;
}

/// The partitions of n into t parts with max - min <= 1 (should be exactly one).
inline std::vector<std::vector<int>> balanced_partitions(int n, int t) {
  std::vector<std::vector<int>> out;
  for (auto& p : partitions_with_parts(n, t)) {
    if (p.front() - p.back() <= 1) out.push_back(p);
  }
  return out;
}

inline int partition_count(int n) {
  int total = 0;
  for (int t = 1; t <= n; ++t) total += static_cast<int>(partitions_with_parts(n, t).size());
  return total;
}

/// d_hat for every k = 0..n by exhaustive search: for every vertex subset,
/// the fewest vertex-disjoint paths (within the induced subgraph) that
/// partition it. Exponential; n <= 12.
inline std::vector<int> brute_force_dhat(const nilcomm::AcyclicDigraph& g) {
  const int n = g.vertex_count();
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const auto& [u, v] : g.edges()) adj[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] = true;

  // ends[mask] bit v set: some path visits exactly `mask` and ends at v.
  std::vector<std::uint32_t> ends(full + 1, 0);
  for (int v = 0; v < n; ++v) ends[1u << v] |= 1u << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!ends[mask]) continue;
    for (int v = 0; v < n; ++v) {
      if (!(ends[mask] >> v & 1)) continue;
      for (int w = 0; w < n; ++w) {
        if (mask >> w & 1) continue;
        if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) ends[mask | 1u << w] |= 1u << w;
      }
    }
  }
  constexpr int kInf = 1 << 20;
  std::vector<int> paths(full + 1, kInf);
  paths[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    // Submasks containing the lowest vertex, each a single path.
    for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low) || !ends[sub]) continue;
      paths[mask] = std::min(paths[mask], 1 + paths[mask ^ sub]);
    }
  }
  std::vector<int> dhat(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const int size = __builtin_popcount(mask);
    for (int k = paths[mask]; k <= n; ++k) {
      dhat[static_cast<std::size_t>(k)] = std::max(dhat[static_cast<std::size_t>(k)], size);
    }
  }
  return dhat;
}

/// Random DAG: edge (i, j), i < j, with probability `density` under a
/// random relabelling of the vertices.
inline nilcomm::AcyclicDigraph random_dag(int n, double density, std::mt19937_64& rng) {
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(label.begin(), label.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<nilcomm::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]);
    }
  }
  return nilcomm::AcyclicDigraph(n, std::move(edges));
}

/// Dimension of {A : A J = J A, A vanishes on the forbidden a^0 slots}
/// computed as the nullity of the n^2-unknown linear system.
inline int restricted_commutant_dimension(const nilcomm::Partition& mu) {
  using nilcomm::FieldMatrix;
  const int n = mu.size();
  const nilcomm::PrimeField field;
  const FieldMatrix j = nilcomm::jordan_matrix(mu, field);
  std::vector<std::vector<std::int64_t>> rows;
  // (AJ - JA)(r, c) = sum_m A(r,m) J(m,c) - J(r,m) A(m,c)
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      std::vector<std::int64_t> eq(static_cast<std::size_t>(n * n), 0);
      for (int m = 0; m < n; ++m) {
        if (j(m, c)) eq[static_cast<std::size_t>(r * n + m)] += 1;
        if (j(r, m)) eq[static_cast<std::size_t>(m * n + c)] -= 1;
      }
      rows.push_back(eq);
    }
  }
  // Forbidden a^0_{xy}: mu_x = mu_y, x >= y; top-left entry of block (x, y).
  std::vector<int> start(static_cast<std::size_t>(mu.length()) + 1, 0);
  for (int x = 1; x <= mu.length(); ++x) start[static_cast<std::size_t>(x)] = start[static_cast<std::size_t>(x - 1)] + mu.part(x);
  for (int x = 1; x <= mu.length(); ++x) {
    for (int y = 1; y <= x; ++y) {
      if (mu.part(x) != mu.part(y)) continue;
      std::vector<std::int64_t> eq(static_cast<std::size_t>(n * n), 0);
      eq[static_cast<std::size_t>(start[static_cast<std::size_t>(x - 1)] * n + start[static_cast<std::size_t>(y - 1)])] = 1;
      rows.push_back(eq);
    }
  }
  const int size = std::max(static_cast<int>(rows.size()), n * n);
  rows.resize(static_cast<std::size_t>(size), std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0));
  for (auto& row : rows) row.resize(static_cast<std::size_t>(size), 0);
  return n * n - nilcomm::rank(FieldMatrix::from_rows(rows, field));
}

}  // namespace oracle

#endif  // NILCOMM_TESTS_ORACLES_HPP
