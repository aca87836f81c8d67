#pragma once

#include "prestable/graph.hpp"
#include "prestable/taut_class.hpp"

#include <string>

namespace prestable {

// {"genus":[...], "halfedges":[...], "involution":[...], "legs":{"1":h,...}}
// serialized from the canonical representative, so the bytes are stable
std::string graph_to_json(const PrestableGraph& g);
PrestableGraph graph_from_json(const std::string& json);

// {"n":..., "terms":[{"graph":..., "psi":{...}, "kappa":{...}, "coeff":"p/q"}]}
std::string taut_class_to_json(const TautClass& c);
TautClass taut_class_from_json(const std::string& json);

} // namespace prestable
