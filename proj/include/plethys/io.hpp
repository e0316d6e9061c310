#pragma once

#include <string>

#include <json.hpp>

#include "plethys/series.hpp"
#include "plethys/symfunc.hpp"
#include "plethys/wreath.hpp"

namespace plethys {

using Json = nlohmann::ordered_json;

/// {"truncation": N, "terms": [{"partition": [...], "num": "..", "den": ".."}, ...]}
/// with terms in canonical order.
Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

/// Same layout; each term's "monomial" lists {"k", "class": "e"|"t", "exp"}.
Json to_json(const WreathSymFunc& w);
WreathSymFunc wreath_from_json(const Json& j);

/// {"genus0": {"3": [[3]], ...}, "genus1": {"1": [[1]], ...}}. Throws
/// InvalidInput on anything malformed, including unstable arities.
ModuleSpec module_spec_from_json(const Json& j);
ModuleSpec load_module_spec(const std::string& path);
Json to_json(const ModuleSpec& spec);

}  // namespace plethys
