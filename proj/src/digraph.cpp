#include "nilcomm/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nilcomm/min_cost_flow.hpp"
#include "nilcomm/seeding.hpp"

namespace nilcomm {

AcyclicDigraph::AcyclicDigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), out_(static_cast<std::size_t>(n) + 1) {
  if (n < 1) throw std::invalid_argument("digraph needs at least one vertex");
  for (const auto& [u, v] : edges_) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has a label outside 1.." + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges_) {
    out_[static_cast<std::size_t>(u)].push_back(v);
    ++indegree[static_cast<std::size_t>(v)];
  }
  for (int v = 1; v <= n; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) order_.push_back(v);
  }
  for (std::size_t i = 0; i < order_.size(); ++i) {
    for (int w : out_[static_cast<std::size_t>(order_[i])]) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) order_.push_back(w);
    }
  }
  if (static_cast<int>(order_.size()) != n) {
    throw std::invalid_argument("digraph has a directed cycle");
  }
}

bool AcyclicDigraph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

AcyclicDigraph from_pattern(const std::vector<std::vector<int>>& support) {
  const int n = static_cast<int>(support.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(support[static_cast<std::size_t>(i)].size()) != n) {
      throw std::invalid_argument("pattern matrix is not square");
    }
    for (int j = 0; j < n; ++j) {
      if (support[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
        if (i == j) throw std::invalid_argument("pattern not nilpotent-generic");
        edges.emplace_back(i + 1, j + 1);
      }
    }
  }
  try {
    return AcyclicDigraph(n, std::move(edges));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("pattern not nilpotent-generic");
  }
}

namespace {

// Marginal vertex gains of successive min-cost augmentations on the
// vertex-split network; gains[k-1] = dhat_k - dhat_{k-1}.
std::vector<int> cover_gains(const AcyclicDigraph& g, int limit) {
  const int n = g.vertex_count();
  const int source = 0;
  const int sink = 1;
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  MinCostFlow flow(2 * n + 2);
  for (int v = 1; v <= n; ++v) {
    flow.add_arc(source, in(v), 1, 0);
    flow.add_arc(in(v), out(v), 1, -1);
    flow.add_arc(out(v), sink, 1, 0);
  }
  for (const auto& [u, v] : g.edges()) flow.add_arc(out(u), in(v), 1, 0);
  flow.start(source, sink);

  std::vector<int> gains;
  for (int k = 0; k < limit; ++k) {
    auto cost = flow.augment();
    if (!cost || *cost >= 0) break;
    gains.push_back(static_cast<int>(-*cost));
  }
  return gains;
}

}  // namespace

int d_hat(const AcyclicDigraph& g, int k) {
  if (k < 0) throw std::domain_error("d_hat: k must be nonnegative");
  int total = 0;
  for (int gain : cover_gains(g, std::min(k, g.vertex_count()))) total += gain;
  return total;
}

DeltaSequence delta_sequence(const AcyclicDigraph& g) {
  DeltaSequence seq;
  seq.delta = cover_gains(g, g.vertex_count());
  seq.dhat.push_back(0);
  for (int gain : seq.delta) seq.dhat.push_back(seq.dhat.back() + gain);
  if (seq.dhat.back() != g.vertex_count()) {
    throw std::logic_error("path cover did not reach every vertex");
  }
  return seq;
}

int longest_path(const AcyclicDigraph& g) {
  std::vector<int> best(static_cast<std::size_t>(g.vertex_count()) + 1, 1);
  int longest = 0;
  for (int v : g.topological_order()) {
    const int here = best[static_cast<std::size_t>(v)];
    longest = std::max(longest, here);
    for (int w : g.out(v)) {
      best[static_cast<std::size_t>(w)] = std::max(best[static_cast<std::size_t>(w)], here + 1);
    }
  }
  return longest;
}

GansnerSaksReport verify_gansner_saks(const AcyclicDigraph& g, PrimeField field, int trials,
                                      std::uint64_t seed, int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  GansnerSaksReport report;
  report.delta = delta_sequence(g).as_partition();
  report.trials = trials;

  // Trial t always uses derive_seed(seed, t); workers take trials by stride.
  std::vector<Partition> shapes(static_cast<std::size_t>(std::max(trials, 0)));
  auto body = [&](int worker) {
    for (int trial = worker; trial < trials; trial += jobs) {
      std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
      FieldMatrix m(g.vertex_count(), field);
      for (const auto& [u, v] : g.edges()) m(u - 1, v - 1) = field.random_nonzero(rng);
      shapes[static_cast<std::size_t>(trial)] = shape_of(m);
    }
  };
  if (jobs == 1) {
    body(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(body, w);
  }

  for (const auto& shape : shapes) {
    if (!dominates(report.delta, shape)) ++report.violations;
    if (shape == report.delta) {
      ++report.matching_trials;
      if (!report.agree) report.shape = shape;
      report.agree = true;
    } else if (!report.agree) {
      report.shape = shape;
    }
  }
  return report;
}

AcyclicDigraph read_digraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  auto parse = [&](const std::string& token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad digraph token '" + token + "' on line " +
                                  std::to_string(line_no));
    }
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string token;
    while (ls >> token) {
      if (token.front() == '#') break;
      tokens.push_back(token);
    }
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens.size() != 1) {
        throw std::invalid_argument("digraph file must start with the vertex count, line " +
                                    std::to_string(line_no));
      }
      n = parse(tokens[0]);
      continue;
    }
    if (tokens.size() != 2) {
      throw std::invalid_argument("expected 'u v' on line " + std::to_string(line_no));
    }
    edges.emplace_back(parse(tokens[0]), parse(tokens[1]));
  }
  if (n < 0) throw std::invalid_argument("digraph input is empty");
  return AcyclicDigraph(n, std::move(edges));
}

void write_digraph(std::ostream& out, const AcyclicDigraph& g) {
  out << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_dot(const AcyclicDigraph& g, const std::vector<std::string>& labels) {
  std::ostringstream dot;
  dot << "digraph G {\n  rankdir=LR;\n";
  for (int v = 1; v <= g.vertex_count(); ++v) {
    dot << "  " << v;
    if (static_cast<int>(labels.size()) >= v) {
      dot << " [label=\"" << labels[static_cast<std::size_t>(v - 1)] << "\"]";
    }
    dot << ";\n";
  }
  for (const auto& [u, v] : g.edges()) dot << "  " << u << " -> " << v << ";\n";
  dot << "}\n";
  return dot.str();
}

}  // namespace nilcomm
