#ifndef RINGSUM_SESSION_HPP
#define RINGSUM_SESSION_HPP

#include "ringsum/compile.hpp"

#include <json.hpp>

namespace ringsum {

using Json = nlohmann::ordered_json;

// Element printing that parses back over the same tower (round-trip safe).
std::string print_elem(const Tower& t, const TowerElem& e);
// Expression evaluation over a fixed tower: generator names resolve to the
// tower's generators, no adjoining happens.
TowerElem parse_elem(const Tower& t, const std::string& src);

Json elem_json(const Tower& t, const TowerElem& e);
Json tower_json(const Tower& t, const std::map<std::string, std::string>& docs = {});

// Structural JSON-schema check (type / properties / required / items / enum),
// enough for the shipped result schema.
bool json_matches_schema(const Json& doc, const Json& schema, std::string* error = nullptr);

} // namespace ringsum

#endif
