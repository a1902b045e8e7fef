#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "torembed/embed.hpp"
#include "torembed/fan.hpp"
#include "torembed/verify.hpp"

namespace torembed {

using Json = nlohmann::ordered_json;

/// Rationals are written as "p/q" ("p" when integral); integers as JSON
/// numbers when they fit in 64 bits and as decimal strings otherwise.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

/// Fan document: exactly {name, rays, cones}. Unknown or missing fields,
/// non-integer entries and wrong arities raise FormatError.
Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json divisor_to_json(const TDivisor& d);
TDivisor divisor_from_json(const Json& j);

Json validation_to_json(const ValidationReport& report);
Json xi_to_json(const XiVector& xi);
XiVector xi_from_json(const Json& j);

Json embedding_to_json(const EmbeddingData& data);
/// Reads the stored epsilon factors verbatim; only the invariants that make
/// the document self-consistent (arities, degrees) are enforced here.
EmbeddingData embedding_from_json(const Json& j);

Json conditions_to_json(const ConditionReport& report);
Json witness_to_json(const Witness& w);
Json certificate_to_json(const Certificate& cert);

/// Serialized form used for files: two-space indent and a trailing newline.
std::string dump(const Json& j);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Fan load_fan(const std::filesystem::path& path);
void save_fan(const std::filesystem::path& path, const Fan& fan);
EmbeddingData load_embedding(const std::filesystem::path& path);
void save_embedding(const std::filesystem::path& path, const EmbeddingData& data);

}  // namespace torembed
