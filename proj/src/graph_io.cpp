#include "klein/graph_io.hpp"

#include <sstream>

namespace klein {

nlohmann::json graph_to_json(const HalfEdgeGraph& g) {
  const GraphData& d = g.data();
  nlohmann::json j;
  j["n_half_edges"] = g.half_edge_count();
  j["pairing"] = d.pairing;
  j["vertex"] = d.vertex;
  j["rotation_next"] = d.next;
  std::vector<int> color(d.color.begin(), d.color.end());
  j["color"] = color;
  nlohmann::json legs = nlohmann::json::object();
  for (std::size_t i = 0; i < d.legs.size(); ++i) legs[std::to_string(i + 1)] = d.legs[i];
  j["legs"] = legs;
  j["vertex_genus"] = d.vertex_genus;
  return j;
}

HalfEdgeGraph graph_from_json(const nlohmann::json& j) {
  GraphData d;
  try {
    const int n = j.at("n_half_edges").get<int>();
    d.pairing = j.at("pairing").get<std::vector<int>>();
    d.vertex = j.at("vertex").get<std::vector<int>>();
    d.next = j.at("rotation_next").get<std::vector<int>>();
    for (int c : j.at("color").get<std::vector<int>>()) {
      if (c != 0 && c != 1) throw GraphError(GraphErrorKind::Malformed, "colour must be 0 or 1");
      d.color.push_back(static_cast<std::uint8_t>(c));
    }
    const auto& legs = j.at("legs");
    d.legs.assign(legs.size(), -1);
    for (auto it = legs.begin(); it != legs.end(); ++it) {
      std::size_t pos = 0;
      const int label = std::stoi(it.key(), &pos);
      if (pos != it.key().size() || label < 1 || label > static_cast<int>(legs.size())) {
        throw GraphError(GraphErrorKind::BadLegLabels, "leg label '" + it.key() + "'");
      }
      d.legs[label - 1] = it.value().get<int>();
    }
    if (j.contains("vertex_genus")) {
      d.vertex_genus = j.at("vertex_genus").get<std::vector<int>>();
    } else {
      int v = 0;
      for (int x : d.vertex) v = std::max(v, x + 1);
      d.vertex_genus.assign(v, 0);
    }
    if (static_cast<int>(d.pairing.size()) != n) {
      throw GraphError(GraphErrorKind::Malformed, "n_half_edges does not match pairing length");
    }
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(GraphErrorKind::Malformed, e.what());
  } catch (const std::invalid_argument&) {
    throw GraphError(GraphErrorKind::BadLegLabels, "non-numeric leg label");
  }
  return HalfEdgeGraph::validate(std::move(d));
}

std::string graph_to_dot(const HalfEdgeGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"";
    const auto rot = g.rotation_at(v);
    for (std::size_t i = 0; i < rot.size(); ++i) os << (i ? " " : "") << rot[i];
    os << "\"];\n";
  }
  for (int h : g.edges()) {
    const int p = g.pairing(h);
    os << "  v" << g.vertex_of(h) << " -- v" << g.vertex_of(p) << " [taillabel=\"" << h
       << "\", headlabel=\"" << p << "\"";
    if (g.twist(h)) os << ", style=dashed";
    os << "];\n";
  }
  for (int label = 1; label <= g.leg_count(); ++label) {
    const int h = g.leg_half_edge(label);
    os << "  l" << label << " [shape=plaintext, label=\"" << label << (g.color(h) ? "'" : "")
       << "\"];\n  v" << g.vertex_of(h) << " -- l" << label << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace klein
