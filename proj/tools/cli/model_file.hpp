#pragma once

#include <string>

#include "json.hpp"

#include "mcc/errors.hpp"
#include "mcc/homology.hpp"
#include "mcc/series.hpp"

namespace mcc::cli {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, schema violation, inconsistent model.
class InputError : public Error {
 public:
  using Error::Error;
};

Json model_to_json(const HomologyModel& model);
/// Validates the schema and the model; throws InputError.
HomologyModel model_from_json(const Json& j);

Json read_json_file(const std::string& path);

/// Exactly one of builtin / file must be non-empty.
HomologyModel resolve_model(const std::string& builtin, const std::string& file);

/// Series file: {"var": "L" | "y", "order": N, "coefficients": [[{"e": doubled, "c": "p/q"}, ...], ...]}.
PSeries series_from_json(const Json& j);
Json series_to_json(const PSeries& s);

}  // namespace mcc::cli
