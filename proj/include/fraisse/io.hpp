#pragma once

#include "json.hpp"

#include "fraisse/constructions.hpp"
#include "fraisse/family_checks.hpp"
#include "fraisse/limits.hpp"
#include "fraisse/morphism.hpp"
#include "fraisse/sequence.hpp"
#include "fraisse/structure.hpp"

namespace fraisse::io {

using nlohmann::json;

// Structures ---------------------------------------------------------------

json to_json(const FinStructure& s);
json to_json(const PartialStructure& p);

// Accepts plain structures as well as ones carrying constants/functions;
// plain inputs round-trip through the .base field with empty tables.
PartialStructure partial_from_json(const json& j);

// Rejects inputs that declare constants or functions.
FinStructure structure_from_json(const json& j);

// Reports and witnesses ----------------------------------------------------

json to_json(const Witness& w);
json to_json(const PropertyReport& r);
json to_json(const PropertyCertificate& c);
json to_json(const QuotientGraph& g);
json violations_to_json(const std::vector<Violation>& vs);

// Named sequences and families ----------------------------------------------

// {"family": "arc"} | {"family": "singleton"}
// {"family": "cantor", "depth": L}
// {"sum": [spec, spec, ...]} | {"product": [spec, spec, ...]}
// {"glue": {"components": [spec, ...],
//           "identify": [[[ci, "anchor"], [cj, "anchor"]], ...]}}
// {"graph": {"vertices": k, "edges": [[u, v], ...]}}
FundamentalSequence sequence_from_json(const json& j);

// {"family": "chain"} | {"family": "singleton"}
// {"family": "cantor", "depth": L}
// {"name": ..., "members": [structure, ...]}
FamilyEnumerator family_from_json(const json& j);

// Files ----------------------------------------------------------------------

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Two-space indented dump with sorted keys and a trailing newline.
std::string pretty(const json& j);

}  // namespace fraisse::io
