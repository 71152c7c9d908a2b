#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "klein/canonical.hpp"
#include "klein/complex.hpp"
#include "klein/graph.hpp"
#include "klein/surface.hpp"

namespace klein {

class PositionOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NotOneVertex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A corolla of MAss(n): inputs 1..n and an output, in a cyclic order read
/// clockwise starting just after the output, each with a colour bit.
/// Always stored with output colour 0; the other member of the reflection
/// pair (reversed order, every colour flipped) is never stored.
struct MobiusCorolla {
  std::vector<int> order;            // input labels after the output
  std::vector<std::uint8_t> colors;  // colors[0] output, colors[j] input j

  int arity() const { return static_cast<int>(order.size()); }

  /// Normalises the reflection pair.
  static MobiusCorolla make(std::vector<int> order, std::vector<std::uint8_t> colors);
  /// Reads a one-vertex graph whose output is the leg with the largest label.
  static MobiusCorolla from_graph(const HalfEdgeGraph& g);
  /// One-vertex graph with legs 1..n as inputs and n+1 as output.
  HalfEdgeGraph graph() const;

  std::string to_string() const;
  auto operator<=>(const MobiusCorolla&) const = default;
};

/// A linear combination of corollas.
using MassSum = std::map<MobiusCorolla, long long>;

/// All 2^n n! corollas with n inputs, sorted.
std::vector<MobiusCorolla> mass_basis(int n);

/// The planar corolla with inputs in order 1..n and all colours 0.
MobiusCorolla mass_planar(int n);
/// The involution a in MAss(1).
MobiusCorolla mass_involution();

/// x o_i y: y's output grafted into input i of x, the new edge contracted.
/// Inputs of y take the labels i..i+m-1; later inputs of x shift by m-1.
MassSum compose_mass(const MobiusCorolla& x, int i, const MobiusCorolla& y);
/// compose_mass when the single resulting term is wanted directly.
MobiusCorolla compose_single(const MobiusCorolla& x, int i, const MobiusCorolla& y);

/// Renames input j to perm[j-1].
MobiusCorolla relabel_inputs(const MobiusCorolla& x, const std::vector<int>& perm);

struct ClosureClass {
  CanonicalCode representative;
  SurfaceType surface;
  std::size_t members = 0;
};

struct ClosureReport {
  int genus = 0;
  int legs = 0;
  GraphVariant variant = GraphVariant::moebius;
  int edge_bound = 0;
  std::size_t graphs = 0;
  std::size_t merges = 0;
  std::vector<ClosureClass> classes;
  std::size_t distinct_invariants = 0;
  /// Every class carries a single surface invariant and no two classes
  /// share one, i.e. union-find count equals invariant count.
  bool exact = false;
  /// Some class contains graphs with different invariants (never expected).
  bool invariant_violation = false;
  std::unordered_map<CanonicalCode, int, CanonicalCodeHash> class_of;

  /// Class index of a graph of this family, or -1.
  int class_index(const HalfEdgeGraph& g) const;
};

/// Union-find over the reduced graphs of (genus, legs) with at most
/// edge_bound internal edges (0: the full range 3 genus - 3 + legs), merging
/// G with G/e for every non-loop edge e. Classes are compared with the band
/// surface invariants of their members.
ClosureReport closure_classes(int genus, int legs, GraphVariant variant = GraphVariant::moebius,
                              int edge_bound = 0);

/// All one-vertex graphs reachable from the one-vertex graph g by splitting
/// its vertex along an interval (both sides of valence >= 3) and then
/// contracting one of the other edges joining the two sides.
std::vector<HalfEdgeGraph> slide_moves(const HalfEdgeGraph& g);

/// At most two twisted loops, each with adjacent half-edges, and the twisted
/// blocks adjacent to each other.
bool is_normal_shape(const HalfEdgeGraph& g);

struct NormalForm {
  HalfEdgeGraph graph;
  /// Every intermediate one-vertex graph, starting with the input; each
  /// consecutive pair differs by one slide move.
  std::vector<HalfEdgeGraph> trace;
};

/// Rewrites a one-vertex Moebius graph into normal shape by slide moves.
/// Each round searches breadth-first for the nearest graph that lowers the
/// number of surplus twisted loops, then the total size of twisted-loop
/// interiors, then the gap between the twisted blocks. The result is the
/// canonical representative (untwisted loops coloured (0,0)).
NormalForm normal_form(const HalfEdgeGraph& g, std::size_t state_limit = 1u << 20);

struct KoszulReport {
  int n = 0;
  std::vector<std::size_t> dims_ass, dims_mass;    // by degree 0..n-2
  std::vector<std::size_t> betti_ass, betti_mass;  // same indexing
  bool d_squared = false;
  bool dims_split = false;   // dims_mass = 2^n dims_ass degreewise
  bool concentrated = false; // homology only in top degree, both operads
  bool top_dims = false;     // n! and 2^n n!
  bool pass() const { return d_squared && dims_split && concentrated && top_dims; }
};

KoszulReport koszul_check(int n, const ComplexOptions& opt = {});

struct DualityReport {
  std::size_t dim_free = 0;      // F(E)(3)
  std::size_t dim_relations = 0; // R
  std::size_t dim_image = 0;     // Psi(R)
  std::size_t dim_annihilator = 0;
  bool relations_generated = false;  // S3 and K orbit of associativity spans the kernel
  bool orthogonal = false;           // <R, Psi(R)> = 0
  bool associativity_pairs_zero = false;
  bool k_compatible = false;         // psi2(a e) = psi1(a) psi2(e)
  bool s2_equivariant = false;
  bool ass_calibration = false;      // the same check for Ass
  bool pass() const;
};

DualityReport quadratic_duality_check();

}  // namespace klein
