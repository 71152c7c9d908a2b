#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "klein/complex.hpp"
#include "klein/enumerate.hpp"
#include "klein/operad.hpp"

namespace klein {

/// One graph complex (variant, genus, legs) or one cobar complex.
struct ComplexCase {
  GraphVariant variant = GraphVariant::ribbon;
  int genus = 0;
  int legs = 0;
  bool cobar = false;
  CobarOperad operad = CobarOperad::Ass;
  int n = 0;
  std::string label() const;
};

/// Stable (genus, legs) graph complexes for all three variants, followed by
/// the cobar complexes for both operads and 2 <= n <= max_cobar.
std::vector<ComplexCase> standard_cases(int max_genus, int max_legs, int max_cobar);

struct SurfaceInvariance {
  std::size_t graphs = 0;
  std::size_t contractions = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// surface_type(G/e) = surface_type(G) for every graph and non-loop edge.
SurfaceInvariance check_surface_invariance(const GraphFamily& f);

using SurfaceKey = std::tuple<int, int, int>;  // handles, crosscaps, boundaries

struct TopDegree {
  /// Largest edge count seen per topological type, and the expected
  /// 6m + 3u + 3h + n - 6.
  std::map<SurfaceKey, std::pair<int, int>> types;
  bool ok() const;
};

/// From a complete enumeration (moebius or ribbon).
TopDegree top_degree_from_family(const GraphFamily& f);

/// Without enumerating: every type occurs among one-vertex graphs, and
/// repeatedly splitting a vertex (which keeps the type) reaches a trivalent
/// graph with 3 genus - 3 + legs edges, the most a reduced graph can have.
TopDegree top_degree_by_expansion(int genus, int legs);

struct CaseResult {
  ComplexCase c;
  bool verified = false;  // false: over budget
  bool d_squared = false;
  std::size_t graphs = 0;
  std::vector<std::size_t> dims;
  std::map<int, std::size_t> betti;  // filled when requested
  double seconds = 0;
  std::string note;
  // Filled for ribbon and moebius graph complexes when requested.
  bool surface_checked = false;
  SurfaceInvariance surface;
  bool top_checked = false;
  TopDegree top;
};

struct CaseOptions {
  std::size_t max_graphs = 0;  // 0: unlimited
  bool betti = false;
  bool surface = false;
  bool top_degree = false;
  ComplexOptions complex;
};

CaseResult run_case(const ComplexCase& c, const CaseOptions& opt);

/// The basic graphs, each with one leg: two interleaved loops (handle), a
/// twisted loop (crosscap) and an untwisted loop (annulus).
struct BasicSurfaces {
  SurfaceType handle, crosscap, annulus;
  bool ok() const;
};
BasicSurfaces basic_surfaces();

struct FigureTerm {
  int sign;
  HalfEdgeGraph graph;
};

/// The eight one-edge trees of the alternating chain in the dianalytic
/// complex with legs 1..4 and root leg 5.
std::vector<FigureTerm> figure_t_chain();

/// Sign of the permutation read off the leaves of a planar tree, walking
/// clockwise from the root leg (which is skipped).
int planar_leaf_sign(const HalfEdgeGraph& tree, int root_leg);

struct FigureTReport {
  std::vector<std::size_t> dims;
  std::map<int, std::size_t> betti;
  bool terms_distinct = false;
  bool closed = false;        // d T = 0
  bool non_bounding = false;  // T not in the image of degree 0
  // When T bounds one or two corollas: their indices in degree 0 with signs,
  // and their rotations with the root leg written 0.
  std::vector<std::pair<int, int>> bounding_chain;
  std::vector<std::string> bounding_text;
  std::size_t b1 = 0;
  // The coloured complex at the same signature.
  std::vector<std::size_t> mobius_dims;
  std::map<int, std::size_t> mobius_betti;
  bool mobius_top_only = false;
  bool pass() const { return terms_distinct && closed && non_bounding && b1 >= 1 && mobius_top_only; }
};

FigureTReport figure_t_check(const ComplexOptions& opt = {});

struct ClosureWitness {
  std::string name;
  HalfEdgeGraph left, right;
  bool merged = false;
};

/// Two merges the closure must perform: a twisted loop lets leg 1 pass to the
/// other side, coming back reversed; three crosscaps equal a handle and a
/// crosscap.
std::vector<ClosureWitness> closure_witnesses();

}  // namespace klein
