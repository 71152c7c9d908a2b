#pragma once

#include <string>

#include "json.hpp"
#include "klein/graph.hpp"

namespace klein {

// {"n_half_edges":N,"pairing":[..],"vertex":[..],"rotation_next":[..],
//  "color":[..],"legs":{"1":h,..},"vertex_genus":[..]}
nlohmann::json graph_to_json(const HalfEdgeGraph& g);
HalfEdgeGraph graph_from_json(const nlohmann::json& j);

// Graphviz rendering. Twisted edges are dashed, legs are drawn as small
// labelled points.
std::string graph_to_dot(const HalfEdgeGraph& g, const std::string& name = "G");

}  // namespace klein
