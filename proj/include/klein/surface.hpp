#pragma once

#include <string>
#include <utility>
#include <vector>

#include "klein/graph.hpp"

namespace klein {

/// A point of the band boundary: half-edge h seen from side +1 or -1.
struct BoundaryState {
  int half_edge;
  int side;
  bool operator==(const BoundaryState&) const = default;
};

/// Closed walks along the boundary of the thickened graph. Every boundary
/// component shows up twice, once per direction of travel.
///
/// From (h, d) the walk crosses the band of h to h' = pairing(h) (a leg is
/// its own partner), picks up the twist d' = d * (-1)^twist(h), and continues
/// to (next(h'), d') if d' = +1, (prev(h'), d') otherwise.
std::vector<std::vector<BoundaryState>> boundary_walk(const HalfEdgeGraph& g);

/// A leg met along a boundary, with `flipped` recording whether the leg's
/// interval runs against the direction of travel.
struct LegMark {
  int label;
  int flipped;
  auto operator<=>(const LegMark&) const = default;
};

struct SurfaceType {
  int handles = 0;     // m
  int crosscaps = 0;   // u, in {0,1,2}
  int boundaries = 0;  // h
  /// One normalised cyclic word per boundary component (possibly empty),
  /// sorted. Only comparable between surface types computed for the same
  /// variant.
  std::vector<std::vector<LegMark>> boundary_legs;

  bool orientable() const { return crosscaps == 0; }
  auto operator<=>(const SurfaceType&) const = default;

  /// "(m,u,h)" followed by the boundary words, e.g. "(0,1,1) [1 2']".
  std::string to_string() const;
  std::string boundary_partition() const;
};

/// Topological type of the band surface together with the arrangement of the
/// legs on its boundary.
///
/// `variant` fixes what the boundary data is taken up to: ribbon keeps the
/// orientation of the surface; moebius allows a global reversal (orientable)
/// or independent reversal of each boundary (non-orientable); the
/// leg-unoriented and dianalytic readings additionally forget leg
/// directions. In the dianalytic reading the colours still decide the
/// surface, so the result is only meaningful for a chosen representative.
SurfaceType surface_type(const HalfEdgeGraph& g, GraphVariant variant = GraphVariant::moebius);

/// Vertex reflections that make every twist parity zero, or an empty vector
/// if the band surface is non-orientable.
std::vector<int> orienting_gauge(const HalfEdgeGraph& g);

}  // namespace klein
