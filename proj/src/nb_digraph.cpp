#include "nilcomm/nb_digraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilcomm/maxnil.hpp"

namespace nilcomm {

std::string BlockVertex::to_string() const {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

int vertex_index(const Partition& mu, const BlockVertex& v) {
  if (v.x < 1 || v.x > mu.length() || v.y < 1 || v.y > mu.part(v.x)) {
    throw std::out_of_range("vertex " + v.to_string() + " does not exist for (" +
                            mu.to_string() + ")");
  }
  return mu.sum(1, v.x - 1) + v.y;
}

BlockVertex block_vertex(const Partition& mu, int index) {
  if (index < 1 || index > mu.size()) {
    throw std::out_of_range("vertex index " + std::to_string(index) + " outside 1.." +
                            std::to_string(mu.size()));
  }
  int x = 1;
  while (index > mu.part(x)) index -= mu.part(x++);
  return {x, index};
}

std::vector<std::string> vertex_labels(const Partition& mu) {
  std::vector<std::string> labels;
  for (int x = 1; x <= mu.length(); ++x) {
    for (int y = 1; y <= mu.part(x); ++y) labels.push_back(BlockVertex{x, y}.to_string());
  }
  return labels;
}

std::vector<BlockEdge> edge_family(const Partition& mu, const ToeplitzParam& param) {
  if (!is_admissible(mu, param)) {
    throw std::invalid_argument("edge_family: inadmissible parameter (" + std::to_string(param.x) +
                                "," + std::to_string(param.y) + "," + std::to_string(param.k) + ")");
  }
  const int d = diagonal_offset(mu, param);
  std::vector<BlockEdge> family;
  for (int p = 1; p <= diagonal_length(mu, param); ++p) {
    family.push_back({{param.x, p}, {param.y, p + d}});
  }
  return family;
}

bool parallel(const BlockEdge& a, const BlockEdge& b) {
  return a.first.x == b.first.x && a.second.x == b.second.x &&
         a.first.y + b.second.y == a.second.y + b.first.y;
}

ToeplitzParam edge_parameter(const Partition& mu, const BlockVertex& from, const BlockVertex& to) {
  vertex_index(mu, from);
  vertex_index(mu, to);
  ToeplitzParam param{from.x, to.x,
                      to.y - from.y - std::max(0, mu.part(to.x) - mu.part(from.x))};
  if (!is_admissible(mu, param) || from.y > diagonal_length(mu, param)) {
    throw std::invalid_argument("edge " + from.to_string() + "->" + to.to_string() +
                                " belongs to no admissible Toeplitz parameter");
  }
  return param;
}

AcyclicDigraph build(const Partition& mu, const std::vector<ToeplitzParam>& params) {
  std::vector<Edge> edges;
  for (const auto& param : params) {
    for (const auto& [from, to] : edge_family(mu, param)) {
      edges.emplace_back(vertex_index(mu, from), vertex_index(mu, to));
    }
  }
  try {
    return AcyclicDigraph(mu.size(), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("admissible parameters produced a bad digraph: ") + e.what());
  }
}

AcyclicDigraph build(const CommutantPattern& pattern) { return build(pattern.mu(), pattern.params()); }

std::vector<BlockVertex> BPathReport::table_vertices() const {
  std::vector<BlockVertex> listing;
  auto add = [&](const BlockVertex& v) {
    if (std::find(listing.begin(), listing.end(), v) == listing.end()) listing.push_back(v);
  };
  for (int x = 1; x <= k; ++x) add({x, 1});
  for (const auto& v : block_set) add(v);
  // The climb set is every last position of blocks 1..k-1 plus (z, mu_z);
  // these are exactly the path vertices after the sweep ends.
  const auto sweep_end = static_cast<std::ptrdiff_t>(k - 1 + block_set.size());
  std::vector<BlockVertex> climb(vertices.begin() + sweep_end - 1, vertices.end());
  std::sort(climb.begin(), climb.end());
  for (const auto& v : climb) add(v);
  return listing;
}

std::vector<ToeplitzParam> BPathReport::parameters(const Partition& mu) const {
  std::vector<ToeplitzParam> params;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    params.push_back(edge_parameter(mu, vertices[i], vertices[i + 1]));
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  return params;
}

BPathReport b_path(const Partition& mu, int k) {
  const int t = mu.length();
  if (k < 1 || k > t || !(mu.part(k - 1) > mu.part(k))) {
    throw std::domain_error("b_path: block " + std::to_string(k) +
                            " does not start a size group of (" + mu.to_string() + ")");
  }
  BPathReport report;
  report.k = k;
  const int top = mu.part(k);
  if (top == 1) {
    report.w = report.z = t;
  } else {
    report.w = k;
    while (report.w < t && top - mu.part(report.w + 1) <= 1) ++report.w;
    report.z = k;
    while (report.z < t && mu.part(report.z + 1) == top) ++report.z;
  }

  const auto form = multiplicity_form(mu);
  int group = 0;
  while (form.groups[static_cast<std::size_t>(group)].first_row != k) ++group;
  report.width = s_width(mu, group + 1);

  for (int x = k; x <= report.w; ++x) {
    for (int y = 1; y <= mu.part(x); ++y) report.block_set.push_back({x, y});
  }

  auto& path = report.vertices;
  for (int x = 1; x < k; ++x) path.push_back({x, 1});
  for (int j = 1; j < top; ++j) {
    for (int x = k; x <= report.w; ++x) path.push_back({x, j});
  }
  for (int x = k; x <= report.z; ++x) path.push_back({x, top});
  // Climb: earlier size groups from the nearest to the first, each walked
  // top to bottom along its last positions.
  for (int g = group - 1; g >= 0; --g) {
    const auto& grp = form.groups[static_cast<std::size_t>(g)];
    for (int x = grp.first_row; x < grp.first_row + grp.multiplicity; ++x) {
      path.push_back({x, grp.size});
    }
  }
  report.length = static_cast<int>(path.size());
  return report;
}

CommutantPattern witness_pattern(const Partition& mu) {
  const auto best = max_nilpotency_index(mu);
  const auto path = b_path(mu, best.argmax_i + 1);
  return CommutantPattern(mu, path.parameters(mu));
}

}  // namespace nilcomm
