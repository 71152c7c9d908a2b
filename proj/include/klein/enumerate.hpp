#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "klein/canonical.hpp"
#include "klein/graph.hpp"
#include "klein/surface.hpp"

namespace klein {

/// Serial code paths are kept as the reference the OpenMP kernels are tested
/// and benchmarked against.
enum class Exec { serial, parallel };

class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TopologicalFilter {
  int handles = 0;
  int crosscaps = 0;
  int boundaries = 1;
  bool matches(const SurfaceType& t) const {
    return t.handles == handles && t.crosscaps == crosscaps && t.boundaries == boundaries;
  }
};

struct EnumerationQuery {
  int genus = 0;
  int legs = 0;
  GraphVariant variant = GraphVariant::ribbon;
  std::optional<TopologicalFilter> filter;
  /// Nonzero: give up with EnumerationBudgetExceeded beyond this many graphs.
  std::size_t max_graphs = 0;

  int max_edges() const { return 3 * genus - 3 + legs; }
  bool stable() const { return 2 * genus + legs > 2; }
};

/// Reduced graphs of one query, grouped by internal edge count (loops
/// included) and sorted by canonical code within each group. Only codes are
/// stored; `graph` decodes the canonical representative on demand.
struct GraphFamily {
  EnumerationQuery query;
  int min_edges = 0;
  std::vector<std::vector<CanonicalCode>> levels;  // levels[i]: min_edges + i edges

  int max_edges_found() const { return min_edges + static_cast<int>(levels.size()) - 1; }
  const std::vector<CanonicalCode>& with_edges(int e) const;
  HalfEdgeGraph graph(int edges, std::size_t i) const { return decode(with_edges(edges)[i]); }
  /// Position of a code among the graphs with the same edge count, or -1.
  long index_of(int edges, const CanonicalCode& c) const;
  std::size_t total() const;

};

GraphFamily enumerate_graphs(const EnumerationQuery& q, Exec exec = Exec::parallel);

/// Reduced trees with inputs 1..n and output n+1, as genus-0 graphs with n+1
/// legs. `variant` is ribbon for planar trees or moebius.
GraphFamily enumerate_trees(int n, GraphVariant variant, Exec exec = Exec::parallel);

/// Degree-wise counts, indexed by edge count from 0 (zeros below min_edges).
std::vector<std::size_t> level_sizes(const GraphFamily& f);

/// All one-vertex graphs with `loops` loops and `legs` legs, one
/// representative per rotation word up to rotation. Moebius-type variants
/// also run through loop twists and leg colours (leg 1 kept at colour 0).
std::vector<HalfEdgeGraph> one_vertex_seeds(int loops, int legs, GraphVariant variant);

/// Every graph obtained by splitting one vertex of g along a cyclic interval
/// leaving both sides of valence >= 3. The new edge is untwisted.
std::vector<HalfEdgeGraph> vertex_expansions(const HalfEdgeGraph& g);

}  // namespace klein
