#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qwa/homs.hpp"
#include "qwa/tame.hpp"

namespace qwa {

using Json = nlohmann::ordered_json;

// JSON forms. Factor indices and w entries are 1-based in files.
// The optional shared field/algebra arguments let callers parent parsed
// values onto an existing context so scalars interoperate; the stored
// configuration must agree.
Json algebra_to_json(const AlgebraPtr& alg);
AlgebraPtr algebra_from_json(const Json& j, ScalarFieldPtr shared_field = nullptr);

Json element_to_json(const GwaElement& a);
GwaElement element_from_json(const Json& j, AlgebraPtr use_algebra = nullptr);

Json hom_to_json(const HomData& d);
HomData hom_from_json(const Json& j, ScalarFieldPtr shared_field = nullptr);

Json chain_to_json(const std::vector<TameGenerator>& chain, const AlgebraPtr& alg);
std::vector<TameGenerator> chain_from_json(const Json& j, AlgebraPtr* alg_out = nullptr);

// Canonical byte form: 2-space indentation, trailing newline. Serialized
// equality coincides with semantic equality for elements and canonical
// bundles.
std::string canonical_dump(const Json& j);

// Parses text into JSON, mapping syntax errors to ParseError with a byte
// position.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

}  // namespace qwa
