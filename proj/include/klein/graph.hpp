#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein {

/// The four graph categories the engine works in.
///
/// - ribbon: cyclic orders at vertices, colours ignored.
/// - moebius: coloured ribbon graphs modulo vertex reflection and, on reduced
///   graphs, the recolouring of internal edges (only the twist parity of an
///   internal edge matters).
/// - dianalytic: cyclic orders up to independent reversal at each vertex;
///   colours are forgotten.
/// - moebius_leg_unoriented: moebius, with leg colours forgotten as well.
enum class GraphVariant : std::uint8_t {
  ribbon = 0,
  moebius = 1,
  dianalytic = 2,
  moebius_leg_unoriented = 3,
};

const char* to_string(GraphVariant v);
GraphVariant parse_variant(const std::string& name);

/// Plain half-edge description, not yet validated.
///
/// Half-edges are dense indices 0..H-1. `pairing` is an involution whose
/// fixed points are the legs, `next` is the clockwise successor of a
/// half-edge around its vertex, and `legs[i]` is the half-edge carrying the
/// leg label i+1.
struct GraphData {
  std::vector<int> pairing;
  std::vector<int> vertex;
  std::vector<int> next;
  std::vector<std::uint8_t> color;
  std::vector<int> legs;
  std::vector<int> vertex_genus;
};

enum class GraphErrorKind {
  NonInvolutivePairing,
  Disconnected,
  BadLegLabels,
  RotationVertexMismatch,
  LoopContraction,
  NotAnEdge,
  NotInternal,
  Malformed,
};

const char* to_string(GraphErrorKind k);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Modular-operad signature of a connected graph.
struct OperadicSignature {
  int genus = 0;
  int legs = 0;
  bool extended_stable() const { return 2 * genus + legs >= 2; }
  bool operator==(const OperadicSignature&) const = default;
};

/// Immutable, validated half-edge graph.
class HalfEdgeGraph {
 public:
  HalfEdgeGraph() = default;

  /// Checks every structural invariant and throws GraphError on violation.
  static HalfEdgeGraph validate(GraphData raw);

  /// Wraps data produced by an internal move that preserves the invariants.
  /// Only checked in debug builds.
  static HalfEdgeGraph from_trusted(GraphData raw);

  const GraphData& data() const { return d_; }

  int half_edge_count() const { return static_cast<int>(d_.pairing.size()); }
  int vertex_count() const { return static_cast<int>(d_.vertex_genus.size()); }
  int leg_count() const { return static_cast<int>(d_.legs.size()); }
  int edge_count() const { return (half_edge_count() - leg_count()) / 2; }

  int pairing(int h) const { return d_.pairing[h]; }
  int vertex_of(int h) const { return d_.vertex[h]; }
  int next(int h) const { return d_.next[h]; }
  int prev(int h) const;
  std::uint8_t color(int h) const { return d_.color[h]; }
  int leg_half_edge(int label) const { return d_.legs[label - 1]; }
  bool is_leg(int h) const { return d_.pairing[h] == h; }
  bool is_loop(int h) const { return !is_leg(h) && d_.vertex[h] == d_.vertex[d_.pairing[h]]; }

  /// Label 1..n of a leg half-edge, 0 for internal half-edges.
  int leg_label(int h) const;

  /// XOR of the two half-edge colours of the edge through h.
  int twist(int h) const { return d_.color[h] ^ d_.color[d_.pairing[h]]; }

  int valence(int v) const;
  /// Half-edges at v in rotation order, starting at the smallest index.
  std::vector<int> rotation_at(int v) const;
  /// Internal edges as representative half-edges h < pairing(h), ascending.
  std::vector<int> edges() const;

  OperadicSignature signature() const;
  int genus() const { return signature().genus; }

  /// All vertices have valence at least 3.
  bool is_reduced() const;

  bool operator==(const HalfEdgeGraph& o) const;

 private:
  explicit HalfEdgeGraph(GraphData d) : d_(std::move(d)) {}
  GraphData d_;
};

/// Half-edge bookkeeping produced by a contraction: old index -> new index,
/// -1 for the two removed half-edges.
struct ContractionResult {
  HalfEdgeGraph graph;
  std::vector<int> half_edge_map;
};

/// Contracts the internal non-loop edge through half-edge h. In the moebius
/// reading, if the two colours differ the endpoint of pairing(h) is
/// reflected first. Rotations are spliced: the merged cycle is the cycle at
/// h's vertex with h replaced by the other vertex's cycle read after pairing(h).
ContractionResult contract_edge(const HalfEdgeGraph& g, int h);

/// Reverses the rotation at v and flips the colours of all half-edges at v.
HalfEdgeGraph reflect_vertex(const HalfEdgeGraph& g, int v);

/// Flips both colours of the internal edge through h. Requires a reduced graph.
HalfEdgeGraph recolor_edge(const HalfEdgeGraph& g, int h);

/// Result of projecting to a coarser category. The colour data is kept
/// verbatim; `colors_quotiented` records that canonical codes in the target
/// variant ignore it (fully for dianalytic, on legs for leg-unoriented).
struct ProjectedGraph {
  HalfEdgeGraph graph;
  GraphVariant variant;
  bool colors_quotiented;
};

ProjectedGraph project_variant(const HalfEdgeGraph& g, GraphVariant target);

/// Inverse of a contraction at vertex v: the half-edges in the cyclic interval
/// of length `len` starting at `first` (following next) move to a new vertex,
/// joined to v by a new untwisted edge. Requires 1 <= len < valence(v).
/// Returns the new graph; the new edge is (H, H+1) with H at v.
HalfEdgeGraph expand_vertex(const HalfEdgeGraph& g, int first, int len);

/// Graphs with a single vertex given by a rotation word. Each entry is either
/// a leg label (positive, with colour) or a loop id (negative, -1..-L); the
/// two occurrences of a loop id pair up.
struct WordLetter {
  int symbol;
  std::uint8_t color = 0;
};
HalfEdgeGraph one_vertex_graph(const std::vector<WordLetter>& word);

/// Graph with one vertex per rotation list. Positive symbols are leg labels,
/// negative symbols are edge ids whose two occurrences pair up.
HalfEdgeGraph graph_from_rotations(const std::vector<std::vector<WordLetter>>& rotations);

/// Rotation word of a one-vertex graph starting at `start` (or at the
/// smallest half-edge when start < 0).
std::vector<WordLetter> rotation_word(const HalfEdgeGraph& g, int start = -1);

/// Apply a half-edge relabelling h -> perm[h] (with vertices renumbered by
/// first appearance). The result is the same abstract graph.
HalfEdgeGraph relabel(const HalfEdgeGraph& g, const std::vector<int>& perm);

}  // namespace klein
