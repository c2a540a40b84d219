#include "nilcomm/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcomm {

using nlohmann::json;

json pattern_to_json(const CommutantPattern& pattern, const std::vector<std::int64_t>* values) {
  if (values && values->size() != pattern.size()) {
    throw std::invalid_argument("pattern_to_json: value count does not match the pattern");
  }
  json out = json::array();
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const auto& p = pattern.params()[i];
    json entry = {{"x", p.x}, {"y", p.y}, {"k", p.k}};
    if (values) entry["value"] = (*values)[i];
    out.push_back(std::move(entry));
  }
  return out;
}

PatternDocument pattern_from_json(const Partition& mu, const json& doc) {
  if (!doc.is_array()) throw std::invalid_argument("pattern document must be a JSON array");
  std::vector<std::pair<ToeplitzParam, std::optional<std::int64_t>>> entries;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("x") || !entry.contains("y") || !entry.contains("k")) {
      throw std::invalid_argument("pattern entry needs integer fields x, y, k: " + entry.dump());
    }
    try {
      ToeplitzParam p{entry.at("x").get<int>(), entry.at("y").get<int>(), entry.at("k").get<int>()};
      std::optional<std::int64_t> value;
      if (entry.contains("value")) value = entry.at("value").get<std::int64_t>();
      entries.emplace_back(p, value);
    } catch (const json::exception& e) {
      throw std::invalid_argument("bad pattern entry " + entry.dump() + ": " + e.what());
    }
  }
  std::vector<ToeplitzParam> params;
  for (const auto& [p, v] : entries) params.push_back(p);
  PatternDocument out{CommutantPattern(mu, params), std::nullopt};

  const bool all_valued =
      !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second.has_value(); });
  if (all_valued) {
    std::vector<std::int64_t> values(out.pattern.size(), 0);
    for (const auto& [p, v] : entries) {
      auto it = std::lower_bound(out.pattern.params().begin(), out.pattern.params().end(), p);
      values[static_cast<std::size_t>(it - out.pattern.params().begin())] = *v;
    }
    out.values = std::move(values);
  }
  return out;
}

json shape_report_to_json(const ShapeSetReport& report) {
  const PrimeField field(report.prime);
  json shapes = json::array();
  json witnesses = json::object();
  json witness_values = json::object();
  for (const auto& [shape, witness] : report.shapes) {
    shapes.push_back(shape.to_string());
    witnesses[shape.to_string()] = report.witness_matrix(shape).to_signed_rows();
    std::vector<std::int64_t> signed_values;
    for (auto v : witness.values) signed_values.push_back(field.to_signed(v));
    witness_values[shape.to_string()] = {{"trial", witness.trial}, {"values", signed_values}};
  }
  return {
      {"mu", report.mu().to_string()},
      {"mode", to_string(report.mode)},
      {"trials", report.trials},
      {"prime", report.prime},
      {"seed", report.seed},
      {"values", report.values},
      {"shapes", shapes},
      {"witnesses", witnesses},
      {"witness_values", witness_values},
  };
}

ShapeSetReport shape_report_from_json(const json& doc) {
  try {
    const Partition mu = parse_partition(doc.at("mu").get<std::string>());
    ShapeSetReport report{full_pattern(mu)};
    report.mode = parse_sample_mode(doc.at("mode").get<std::string>());
    report.trials = doc.at("trials").get<std::uint64_t>();
    report.prime = doc.at("prime").get<std::uint64_t>();
    report.seed = doc.at("seed").get<std::uint64_t>();
    report.values = doc.at("values").get<std::vector<std::int64_t>>();
    const PrimeField field(report.prime);
    const auto& wv = doc.at("witness_values");
    for (const auto& name : doc.at("shapes")) {
      const auto key = name.get<std::string>();
      const auto& entry = wv.at(key);
      ShapeWitness witness{entry.at("trial").get<std::uint64_t>(), {}};
      for (auto v : entry.at("values").get<std::vector<std::int64_t>>()) {
        witness.values.push_back(field.from_signed(v));
      }
      if (witness.values.size() != report.pattern.size()) {
        throw std::invalid_argument("witness for " + key + " has the wrong number of values");
      }
      report.shapes.emplace(parse_partition(key), std::move(witness));
    }
    return report;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed shape report: ") + e.what());
  }
}

json maxnil_to_json(const Partition& mu, const MaxNilReport& report) {
  json candidates = json::array();
  for (const auto& c : report.candidates) {
    candidates.push_back({{"i", c.i}, {"r", c.r}, {"value", c.value}});
  }
  return {{"mu", mu.to_string()},
          {"value", report.value},
          {"argmax_i", report.argmax_i},
          {"candidates", candidates}};
}

json bpath_to_json(const BPathReport& report) {
  auto labels = [](const std::vector<BlockVertex>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(json::array({v.x, v.y}));
    return out;
  };
  return {{"k", report.k},
          {"s", report.width},
          {"w", report.w},
          {"z", report.z},
          {"block_set", labels(report.block_set)},
          {"table_vertices", labels(report.table_vertices())},
          {"path", labels(report.vertices)},
          {"length", report.length}};
}

}  // namespace nilcomm
