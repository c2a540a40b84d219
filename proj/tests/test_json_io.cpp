#include <doctest.h>

#include <stdexcept>

#include "nilcomm/json_io.hpp"

using namespace nilcomm;
using nlohmann::json;

TEST_SUITE("json") {

TEST_CASE("pattern round trip") {
  const Partition mu({5, 3});
  const auto pattern = full_pattern(mu);
  const auto doc = pattern_to_json(pattern);
  CHECK(doc.size() == 12);
  const auto back = pattern_from_json(mu, doc);
  CHECK(back.pattern.params() == pattern.params());
  CHECK_FALSE(back.values.has_value());

  std::vector<std::int64_t> values(pattern.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<std::int64_t>(i) - 5;
  const auto valued = pattern_from_json(mu, json::parse(pattern_to_json(pattern, &values).dump()));
  REQUIRE(valued.values.has_value());
  CHECK(*valued.values == values);
}

TEST_CASE("pattern errors") {
  const Partition mu({2, 2});
  CHECK_THROWS_AS(pattern_from_json(mu, json::object()), std::invalid_argument);
  CHECK_THROWS_AS(pattern_from_json(mu, json::parse(R"([{"x":1,"y":1}])")), std::invalid_argument);
  CHECK_THROWS_AS(pattern_from_json(mu, json::parse(R"([{"x":2,"y":1,"k":0}])")), std::invalid_argument);
  CHECK_THROWS_AS(pattern_from_json(mu, json::parse(R"([{"x":"a","y":1,"k":0}])")), std::invalid_argument);
}

TEST_CASE("shape report round trip") {
  ShapeSetOptions options;
  options.mode = SampleMode::value_sample;
  options.budget = 500;
  options.seed = 3;
  const auto report = shape_set(Partition({3, 2, 1}), options);
  const auto doc = shape_report_to_json(report);
  CHECK(doc.at("mode") == "value-sample");
  const auto back = shape_report_from_json(json::parse(doc.dump()));
  CHECK(back.mu() == report.mu());
  CHECK(back.trials == report.trials);
  CHECK(back.values == report.values);
  REQUIRE(back.shapes.size() == report.shapes.size());
  for (const auto& [shape, witness] : report.shapes) {
    CHECK(back.shapes.at(shape).values == witness.values);
    CHECK(back.witness_matrix(shape) == report.witness_matrix(shape));
  }
  CHECK(shape_report_to_json(back) == doc);
  CHECK_THROWS_AS(shape_report_from_json(json::object()), std::invalid_argument);
}

TEST_CASE("maxnil and b-path documents") {
  const Partition mu({4, 3, 2, 2, 1});
  const auto m = maxnil_to_json(mu, max_nilpotency_index(mu));
  CHECK(m.at("value") == 9);
  CHECK(m.at("candidates").size() == 4);
  const auto b = bpath_to_json(b_path(mu, 2));
  CHECK(b.at("length") == 9);
  CHECK(b.at("s") == 3);
  CHECK(b.at("path").front() == json::array({1, 1}));
}

}
