#pragma once

// JSON and CSV serialization for collections, verification reports, and
// certificates, plus a small structural schema validator (type,
// required, properties, items, enum) for the documents the CLI emits.
// Exact integers are serialized as decimal strings so nothing is
// truncated.

#include <optional>
#include <string>

#include <json.hpp>

#include "excol/characters.hpp"
#include "excol/collections.hpp"
#include "excol/fullness.hpp"
#include "excol/verify.hpp"

namespace excol {

using Json = nlohmann::json;

Json space_to_json(const MarkingSplit& space);
MarkingSplit space_from_json(const Json& j);

Json collection_to_json(const Collection& c);
Collection collection_from_json(const Json& j);

Json report_to_json(const VerifyReport& r);
std::string report_to_csv(const VerifyReport& r);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
Json orbits_to_json(const OrbitReport& o);

// First violation of the (sub)schema, or nullopt when the value
// conforms.
std::optional<std::string> schema_violation(const Json& value,
                                            const Json& schema);

}  // namespace excol
