#include "klein/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace klein {

const char* to_string(GraphVariant v) {
  switch (v) {
    case GraphVariant::ribbon: return "ribbon";
    case GraphVariant::moebius: return "moebius";
    case GraphVariant::dianalytic: return "dianalytic";
    case GraphVariant::moebius_leg_unoriented: return "moebius_leg_unoriented";
  }
  return "?";
}

GraphVariant parse_variant(const std::string& name) {
  if (name == "ribbon") return GraphVariant::ribbon;
  if (name == "moebius" || name == "mobius") return GraphVariant::moebius;
  if (name == "dianalytic") return GraphVariant::dianalytic;
  if (name == "moebius_leg_unoriented" || name == "leg-unoriented") {
    return GraphVariant::moebius_leg_unoriented;
  }
  throw std::invalid_argument("unknown graph variant '" + name + "'");
}

const char* to_string(GraphErrorKind k) {
  switch (k) {
    case GraphErrorKind::NonInvolutivePairing: return "NonInvolutivePairing";
    case GraphErrorKind::Disconnected: return "Disconnected";
    case GraphErrorKind::BadLegLabels: return "BadLegLabels";
    case GraphErrorKind::RotationVertexMismatch: return "RotationVertexMismatch";
    case GraphErrorKind::LoopContraction: return "LoopContraction";
    case GraphErrorKind::NotAnEdge: return "NotAnEdge";
    case GraphErrorKind::NotInternal: return "NotInternal";
    case GraphErrorKind::Malformed: return "Malformed";
  }
  return "?";
}

namespace {

void fail(GraphErrorKind k, const std::string& msg) { throw GraphError(k, msg); }

void check_invariants(const GraphData& d) {
  const int h_count = static_cast<int>(d.pairing.size());
  const int v_count = static_cast<int>(d.vertex_genus.size());
  if (static_cast<int>(d.vertex.size()) != h_count || static_cast<int>(d.next.size()) != h_count ||
      static_cast<int>(d.color.size()) != h_count) {
    fail(GraphErrorKind::Malformed, "per-half-edge arrays have different lengths");
  }
  if (h_count == 0 || v_count == 0) fail(GraphErrorKind::Malformed, "empty graph");
  for (int g : d.vertex_genus) {
    if (g < 0) fail(GraphErrorKind::Malformed, "negative vertex genus");
  }
  for (int h = 0; h < h_count; ++h) {
    const int p = d.pairing[h];
    if (p < 0 || p >= h_count || d.pairing[p] != h) {
      fail(GraphErrorKind::NonInvolutivePairing,
           "pairing is not an involution at half-edge " + std::to_string(h));
    }
    if (d.color[h] > 1) fail(GraphErrorKind::Malformed, "colour must be 0 or 1");
    if (d.vertex[h] < 0 || d.vertex[h] >= v_count) {
      fail(GraphErrorKind::RotationVertexMismatch, "vertex index out of range");
    }
  }

  // Legs are exactly the fixed points, each labelled once.
  std::vector<int> seen(h_count, 0);
  int fixed = 0;
  for (int h = 0; h < h_count; ++h) fixed += d.pairing[h] == h;
  if (static_cast<int>(d.legs.size()) != fixed) {
    fail(GraphErrorKind::BadLegLabels, "leg labels must be exactly {1..n} for the n fixed points");
  }
  for (std::size_t i = 0; i < d.legs.size(); ++i) {
    const int h = d.legs[i];
    if (h < 0 || h >= h_count || d.pairing[h] != h || seen[h]++) {
      fail(GraphErrorKind::BadLegLabels, "label " + std::to_string(i + 1) + " is not a distinct leg");
    }
  }

  // Rotation: a permutation whose cycles are exactly the vertices.
  std::vector<int> indeg(h_count, 0);
  for (int h = 0; h < h_count; ++h) {
    const int n = d.next[h];
    if (n < 0 || n >= h_count || indeg[n]++) {
      fail(GraphErrorKind::RotationVertexMismatch, "rotation is not a permutation");
    }
    if (d.vertex[n] != d.vertex[h]) {
      fail(GraphErrorKind::RotationVertexMismatch,
           "rotation leaves vertex " + std::to_string(d.vertex[h]));
    }
  }
  std::vector<int> cycles_at(v_count, 0);
  std::vector<char> visited(h_count, 0);
  for (int h = 0; h < h_count; ++h) {
    if (visited[h]) continue;
    ++cycles_at[d.vertex[h]];
    for (int x = h; !visited[x]; x = d.next[x]) visited[x] = 1;
  }
  for (int v = 0; v < v_count; ++v) {
    if (cycles_at[v] != 1) {
      fail(GraphErrorKind::RotationVertexMismatch,
           "vertex " + std::to_string(v) + " has " + std::to_string(cycles_at[v]) + " rotation cycles");
    }
  }

  // Connectivity through internal edges.
  std::vector<int> parent(v_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = v_count;
  for (int h = 0; h < h_count; ++h) {
    const int a = find(d.vertex[h]);
    const int b = find(d.vertex[d.pairing[h]]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) fail(GraphErrorKind::Disconnected, std::to_string(components) + " components");
}

}  // namespace

HalfEdgeGraph HalfEdgeGraph::validate(GraphData raw) {
  check_invariants(raw);
  return HalfEdgeGraph(std::move(raw));
}

HalfEdgeGraph HalfEdgeGraph::from_trusted(GraphData raw) {
#ifndef NDEBUG
  check_invariants(raw);
#endif
  return HalfEdgeGraph(std::move(raw));
}

int HalfEdgeGraph::prev(int h) const {
  int x = h;
  while (d_.next[x] != h) x = d_.next[x];
  return x;
}

int HalfEdgeGraph::leg_label(int h) const {
  for (std::size_t i = 0; i < d_.legs.size(); ++i) {
    if (d_.legs[i] == h) return static_cast<int>(i) + 1;
  }
  return 0;
}

int HalfEdgeGraph::valence(int v) const {
  return static_cast<int>(std::count(d_.vertex.begin(), d_.vertex.end(), v));
}

std::vector<int> HalfEdgeGraph::rotation_at(int v) const {
  const auto it = std::find(d_.vertex.begin(), d_.vertex.end(), v);
  std::vector<int> out;
  if (it == d_.vertex.end()) return out;
  const int start = static_cast<int>(it - d_.vertex.begin());
  int x = start;
  do {
    out.push_back(x);
    x = d_.next[x];
  } while (x != start);
  return out;
}

std::vector<int> HalfEdgeGraph::edges() const {
  std::vector<int> out;
  for (int h = 0; h < half_edge_count(); ++h) {
    if (h < d_.pairing[h]) out.push_back(h);
  }
  return out;
}

OperadicSignature HalfEdgeGraph::signature() const {
  int g = edge_count() - vertex_count() + 1;
  for (int vg : d_.vertex_genus) g += vg;
  return {g, leg_count()};
}

bool HalfEdgeGraph::is_reduced() const {
  std::vector<int> val(vertex_count(), 0);
  for (int v : d_.vertex) ++val[v];
  return std::all_of(val.begin(), val.end(), [](int x) { return x >= 3; });
}

bool HalfEdgeGraph::operator==(const HalfEdgeGraph& o) const {
  return d_.pairing == o.d_.pairing && d_.vertex == o.d_.vertex && d_.next == o.d_.next &&
         d_.color == o.d_.color && d_.legs == o.d_.legs && d_.vertex_genus == o.d_.vertex_genus;
}

namespace {

void reflect_in_place(GraphData& d, int v) {
  const int h_count = static_cast<int>(d.pairing.size());
  std::vector<int> prev(h_count, -1);
  for (int h = 0; h < h_count; ++h) prev[d.next[h]] = h;
  for (int h = 0; h < h_count; ++h) {
    if (d.vertex[h] != v) continue;
    d.color[h] ^= 1;
  }
  std::vector<int> next = d.next;
  for (int h = 0; h < h_count; ++h) {
    if (d.vertex[h] == v) next[h] = prev[h];
  }
  d.next = std::move(next);
}

}  // namespace

ContractionResult contract_edge(const HalfEdgeGraph& g, int h) {
  if (h < 0 || h >= g.half_edge_count() || g.is_leg(h)) {
    throw GraphError(GraphErrorKind::NotAnEdge, "half-edge " + std::to_string(h) + " is not internal");
  }
  if (g.is_loop(h)) {
    throw GraphError(GraphErrorKind::LoopContraction, "loops are never contracted");
  }
  GraphData d = g.data();
  const int h2 = d.pairing[h];
  const int v1 = d.vertex[h];
  const int v2 = d.vertex[h2];
  if (d.color[h] != d.color[h2]) reflect_in_place(d, v2);

  // Splice: at h's position insert v2's cycle read after h2.
  std::vector<int> s1, s2;
  for (int x = d.next[h]; x != h; x = d.next[x]) s1.push_back(x);
  for (int x = d.next[h2]; x != h2; x = d.next[x]) s2.push_back(x);
  std::vector<int> merged = s2;
  merged.insert(merged.end(), s1.begin(), s1.end());

  const int h_count = g.half_edge_count();
  std::vector<int> map(h_count, -1);
  int fresh = 0;
  for (int x = 0; x < h_count; ++x) {
    if (x != h && x != h2) map[x] = fresh++;
  }
  auto vmap = [&](int v) { return v == v2 ? (v1 > v2 ? v1 - 1 : v1) : (v > v2 ? v - 1 : v); };

  GraphData out;
  out.pairing.resize(fresh);
  out.vertex.resize(fresh);
  out.next.resize(fresh);
  out.color.resize(fresh);
  for (int x = 0; x < h_count; ++x) {
    if (map[x] < 0) continue;
    out.pairing[map[x]] = map[d.pairing[x]];
    out.vertex[map[x]] = vmap(d.vertex[x]);
    out.next[map[x]] = map[d.next[x]];
    out.color[map[x]] = d.color[x];
  }
  if (!merged.empty()) {
    for (std::size_t i = 0; i < merged.size(); ++i) {
      out.next[map[merged[i]]] = map[merged[(i + 1) % merged.size()]];
    }
  }
  for (int leg : d.legs) out.legs.push_back(map[leg]);
  out.vertex_genus = d.vertex_genus;
  out.vertex_genus[v1] += out.vertex_genus[v2];
  out.vertex_genus.erase(out.vertex_genus.begin() + v2);
  return {HalfEdgeGraph::from_trusted(std::move(out)), std::move(map)};
}

HalfEdgeGraph reflect_vertex(const HalfEdgeGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw GraphError(GraphErrorKind::Malformed, "no vertex " + std::to_string(v));
  }
  GraphData d = g.data();
  reflect_in_place(d, v);
  return HalfEdgeGraph::from_trusted(std::move(d));
}

HalfEdgeGraph recolor_edge(const HalfEdgeGraph& g, int h) {
  if (h < 0 || h >= g.half_edge_count() || g.is_leg(h)) {
    throw GraphError(GraphErrorKind::NotInternal, "half-edge " + std::to_string(h) + " is a leg");
  }
  if (!g.is_reduced()) {
    throw GraphError(GraphErrorKind::Malformed, "recolouring applies to reduced graphs only");
  }
  GraphData d = g.data();
  d.color[h] ^= 1;
  d.color[d.pairing[h]] ^= 1;
  return HalfEdgeGraph::from_trusted(std::move(d));
}

ProjectedGraph project_variant(const HalfEdgeGraph& g, GraphVariant target) {
  switch (target) {
    case GraphVariant::ribbon: {
      GraphData d = g.data();
      std::fill(d.color.begin(), d.color.end(), 0);
      return {HalfEdgeGraph::from_trusted(std::move(d)), target, false};
    }
    case GraphVariant::moebius:
      return {g, target, false};
    case GraphVariant::dianalytic:
    case GraphVariant::moebius_leg_unoriented:
      return {g, target, true};
  }
  return {g, target, false};
}

HalfEdgeGraph expand_vertex(const HalfEdgeGraph& g, int first, int len) {
  const int v = g.vertex_of(first);
  std::vector<int> cyc;
  int x = first;
  do {
    cyc.push_back(x);
    x = g.next(x);
  } while (x != first);
  const int d = static_cast<int>(cyc.size());
  if (len < 1 || len >= d) {
    throw GraphError(GraphErrorKind::Malformed, "expansion interval must be a proper nonempty arc");
  }
  GraphData out = g.data();
  const int h_count = g.half_edge_count();
  const int p = h_count, q = h_count + 1;
  const int w = g.vertex_count();
  out.pairing.push_back(q);
  out.pairing.push_back(p);
  out.vertex.push_back(v);
  out.vertex.push_back(w);
  out.next.push_back(-1);
  out.next.push_back(-1);
  out.color.push_back(0);
  out.color.push_back(0);
  out.vertex_genus.push_back(0);
  // v keeps cyc[len..d-1] followed by p; w gets cyc[0..len-1] followed by q.
  for (int i = len; i < d; ++i) out.next[cyc[i]] = (i + 1 < d) ? cyc[i + 1] : p;
  out.next[p] = cyc[len];
  for (int i = 0; i < len; ++i) {
    out.vertex[cyc[i]] = w;
    out.next[cyc[i]] = (i + 1 < len) ? cyc[i + 1] : q;
  }
  out.next[q] = cyc[0];
  return HalfEdgeGraph::from_trusted(std::move(out));
}

HalfEdgeGraph one_vertex_graph(const std::vector<WordLetter>& word) {
  const int h_count = static_cast<int>(word.size());
  GraphData d;
  d.pairing.assign(h_count, -1);
  d.vertex.assign(h_count, 0);
  d.next.resize(h_count);
  d.color.resize(h_count);
  d.vertex_genus = {0};
  int max_label = 0;
  for (const auto& l : word) max_label = std::max(max_label, l.symbol);
  d.legs.assign(max_label, -1);
  for (int i = 0; i < h_count; ++i) {
    d.next[i] = (i + 1) % h_count;
    d.color[i] = word[i].color;
    const int s = word[i].symbol;
    if (s > 0) {
      if (d.legs[s - 1] != -1) throw GraphError(GraphErrorKind::BadLegLabels, "repeated leg label");
      d.legs[s - 1] = i;
      d.pairing[i] = i;
    } else if (s < 0) {
      for (int j = i + 1; j < h_count; ++j) {
        if (word[j].symbol == s) {
          if (d.pairing[i] != -1 || d.pairing[j] != -1) {
            throw GraphError(GraphErrorKind::NonInvolutivePairing, "loop symbol used more than twice");
          }
          d.pairing[i] = j;
          d.pairing[j] = i;
        }
      }
      if (d.pairing[i] == -1) {
        throw GraphError(GraphErrorKind::NonInvolutivePairing, "unpaired loop symbol");
      }
    } else if (d.pairing[i] == -1) {
      throw GraphError(GraphErrorKind::Malformed, "symbol 0 is not allowed");
    }
  }
  return HalfEdgeGraph::validate(std::move(d));
}

HalfEdgeGraph graph_from_rotations(const std::vector<std::vector<WordLetter>>& rotations) {
  GraphData d;
  std::map<int, int> first;
  int max_label = 0;
  for (const auto& rot : rotations)
    for (const auto& l : rot) max_label = std::max(max_label, l.symbol);
  d.legs.assign(max_label, -1);
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    const int base = static_cast<int>(d.pairing.size());
    const int val = static_cast<int>(rotations[v].size());
    if (val == 0) throw GraphError(GraphErrorKind::Malformed, "empty vertex");
    for (int k = 0; k < val; ++k) {
      const int h = base + k;
      const auto& l = rotations[v][k];
      d.vertex.push_back(static_cast<int>(v));
      d.next.push_back(base + (k + 1) % val);
      d.color.push_back(l.color);
      d.pairing.push_back(-1);
      if (l.symbol > 0) {
        if (d.legs[l.symbol - 1] != -1) throw GraphError(GraphErrorKind::BadLegLabels, "repeated leg label");
        d.legs[l.symbol - 1] = h;
        d.pairing[h] = h;
      } else if (l.symbol < 0) {
        auto [it, fresh] = first.try_emplace(l.symbol, h);
        if (!fresh) {
          if (it->second < 0) throw GraphError(GraphErrorKind::NonInvolutivePairing, "edge symbol used more than twice");
          d.pairing[h] = it->second;
          d.pairing[it->second] = h;
          it->second = -1;
        }
      } else {
        throw GraphError(GraphErrorKind::Malformed, "symbol 0 is not allowed");
      }
    }
  }
  for (auto [sym, h] : first) {
    if (h >= 0) throw GraphError(GraphErrorKind::NonInvolutivePairing, "unpaired edge symbol");
  }
  d.vertex_genus.assign(rotations.size(), 0);
  return HalfEdgeGraph::validate(std::move(d));
}

std::vector<WordLetter> rotation_word(const HalfEdgeGraph& g, int start) {
  if (g.vertex_count() != 1) throw GraphError(GraphErrorKind::Malformed, "not a one-vertex graph");
  if (start < 0) start = 0;
  std::vector<int> loop_id(g.half_edge_count(), 0);
  int loops = 0;
  std::vector<WordLetter> out;
  int x = start;
  do {
    if (g.is_leg(x)) {
      out.push_back({g.leg_label(x), g.color(x)});
    } else {
      if (loop_id[x] == 0) loop_id[x] = loop_id[g.pairing(x)] = -(++loops);
      out.push_back({loop_id[x], g.color(x)});
    }
    x = g.next(x);
  } while (x != start);
  return out;
}

HalfEdgeGraph relabel(const HalfEdgeGraph& g, const std::vector<int>& perm) {
  const int h_count = g.half_edge_count();
  const GraphData& s = g.data();
  GraphData d;
  d.pairing.resize(h_count);
  d.vertex.resize(h_count);
  d.next.resize(h_count);
  d.color.resize(h_count);
  std::vector<int> inv(h_count);
  for (int h = 0; h < h_count; ++h) inv[perm[h]] = h;
  std::vector<int> vnew(g.vertex_count(), -1);
  int vc = 0;
  for (int nh = 0; nh < h_count; ++nh) {
    const int v = s.vertex[inv[nh]];
    if (vnew[v] < 0) vnew[v] = vc++;
  }
  for (int h = 0; h < h_count; ++h) {
    d.pairing[perm[h]] = perm[s.pairing[h]];
    d.vertex[perm[h]] = vnew[s.vertex[h]];
    d.next[perm[h]] = perm[s.next[h]];
    d.color[perm[h]] = s.color[h];
  }
  for (int leg : s.legs) d.legs.push_back(perm[leg]);
  d.vertex_genus.assign(vc, 0);
  for (int v = 0; v < g.vertex_count(); ++v) d.vertex_genus[vnew[v]] = s.vertex_genus[v];
  return HalfEdgeGraph::validate(std::move(d));
}

}  // namespace klein
