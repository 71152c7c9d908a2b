#pragma once

#include <cstdint>
#include <vector>

#include "klein/graph.hpp"

namespace klein {

/// An orientation of det(Q^edges) (x) det(H1(|G|)) written as an ordered list
/// of directed edges and an ordered list of integer cycles over those edges.
///
/// `edges[i]` is a half-edge; the edge is directed away from it. `cycles[k][i]`
/// is the coefficient of edge i in the k-th cycle. For reference orientations
/// `nontree[k]` is the position of the non-tree edge of the k-th fundamental
/// cycle, and the coordinates of any cycle in that basis are its coefficients
/// at those positions.
struct Orientation {
  std::vector<int> edges;
  std::vector<std::vector<int>> cycles;
  std::vector<int> nontree;
};

/// Edges ordered by smallest half-edge and directed away from it; cycles are
/// the fundamental cycles of the breadth-first spanning tree grown from the
/// vertex of half-edge 0, scanning half-edges in index order.
Orientation reference_orientation(const HalfEdgeGraph& g);

/// Sign by which the half-edge bijection f: source -> target carries the
/// source orientation to the target orientation. The target must carry
/// `nontree` coordinates (a reference orientation, possibly perturbed).
int transport_sign(const HalfEdgeGraph& source, const Orientation& source_or, const std::vector<int>& f,
                   const HalfEdgeGraph& target, const Orientation& target_ref);

/// Orientation induced on G/e from an orientation of G: e is moved to the
/// front of the edge order (returned as the sign (-1)^position) and dropped,
/// and every cycle is restricted to the remaining edges. Half-edges are
/// renamed with the contraction's half_edge_map.
struct InducedOrientation {
  Orientation orientation;
  int sign;
};
InducedOrientation induced_orientation(const Orientation& o, int edge_half, const std::vector<int>& half_edge_map,
                                       const HalfEdgeGraph& g);

/// A different orientation of the same graph: the edge order is shuffled and
/// the cycle basis replaced by a random unimodular recombination. Keeps the
/// coordinate functional, so it can still serve as a transport target.
Orientation perturbed_orientation(const Orientation& o, std::uint64_t seed);

/// Sign of a permutation given as a vector.
int permutation_sign(const std::vector<int>& p);

/// Exact determinant of a small integer matrix (fraction-free elimination).
long long small_determinant(std::vector<std::vector<long long>> m);

}  // namespace klein
