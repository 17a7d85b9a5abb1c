// JSON (de)serialization of harmonic mappings.
//
// Schema: {"alpha": real, "lambda": [re, im], "n": int, "order": int,
//          "h": [[re, im], ...], "g": [[re, im], ...]}
// with coefficients listed from degree 0.  Free-form mappings omit alpha,
// lambda and n.  Doubles round-trip bit-for-bit through this format.

#pragma once

#include <string>

#include <json.hpp>

#include "qcharm/mapping.hpp"

namespace qcharm {

nlohmann::json mapping_to_json(const HarmonicMapping& f);

// strict = true runs validate_mapping on the result; loaders that want to
// inspect a possibly inconsistent file (e.g. the verify command) pass false.
HarmonicMapping mapping_from_json(const nlohmann::json& j, bool strict = true);

void save_mapping(const HarmonicMapping& f, const std::string& path);
HarmonicMapping load_mapping(const std::string& path, bool strict = true);

}  // namespace qcharm
