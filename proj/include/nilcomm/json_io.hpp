#ifndef NILCOMM_JSON_IO_HPP
#define NILCOMM_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "nilcomm/commutant.hpp"
#include "nilcomm/maxnil.hpp"
#include "nilcomm/nb_digraph.hpp"
#include "nilcomm/oracle.hpp"

namespace nilcomm {

/// [{"x":..,"y":..,"k":..[,"value":..]}, ...]; values are signed
/// representatives when given.
nlohmann::json pattern_to_json(const CommutantPattern& pattern,
                               const std::vector<std::int64_t>* values = nullptr);

struct PatternDocument {
  CommutantPattern pattern;
  /// Present only if every entry carries a value; aligned with pattern.params().
  std::optional<std::vector<std::int64_t>> values;
};

/// Throws std::invalid_argument on a malformed document or a parameter that
/// is inadmissible for mu.
PatternDocument pattern_from_json(const Partition& mu, const nlohmann::json& doc);

/// {mu, mode, trials, prime, seed, values, shapes, witnesses, witness_values}
nlohmann::json shape_report_to_json(const ShapeSetReport& report);
ShapeSetReport shape_report_from_json(const nlohmann::json& doc);

nlohmann::json maxnil_to_json(const Partition& mu, const MaxNilReport& report);
nlohmann::json bpath_to_json(const BPathReport& report);

}  // namespace nilcomm

#endif  // NILCOMM_JSON_IO_HPP
