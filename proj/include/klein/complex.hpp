#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "klein/canonical.hpp"
#include "klein/enumerate.hpp"
#include "klein/linalg.hpp"
#include "klein/orientation.hpp"

namespace klein {

class DegreeOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ComplexNotValidated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct OrientedBasisElement {
  HalfEdgeGraph graph;
  Orientation orientation;
};

/// Cochain complex graded by internal edge count. The differential expands
/// vertices; its matrix from degree s to s+1 has one row per basis graph of
/// degree s+1 and is the transpose of edge contraction.
struct GradedComplex {
  std::string label;
  GraphVariant variant = GraphVariant::ribbon;
  int genus = 0;
  int legs = 0;
  std::optional<TopologicalFilter> filter;
  std::uint64_t orientation_seed = 0;  // 0: plain reference orientations

  int min_degree = 0;
  std::vector<std::vector<CanonicalCode>> bases;     // bases[i]: degree min_degree + i
  std::vector<std::vector<CanonicalCode>> excluded;  // graphs with orientation-reversing automorphisms
  std::vector<SparseIntMatrix> differentials;        // differentials[i]: degree min_degree + i -> + 1
  bool validated = false;

  int max_degree() const { return min_degree + static_cast<int>(bases.size()) - 1; }
  std::size_t dim(int s) const;
  const std::vector<CanonicalCode>& basis(int s) const;
  long index_of(int s, const CanonicalCode& c) const;
  OrientedBasisElement element(int s, std::size_t i) const;
};

struct ComplexOptions {
  Exec exec = Exec::parallel;
  /// Nonzero: every basis element uses a pseudo-randomly perturbed
  /// orientation derived from this seed and its code. The resulting complex
  /// differs from the plain one by a diagonal change of basis.
  std::uint64_t orientation_seed = 0;
};

GradedComplex build_graph_complex(const EnumerationQuery& q, const ComplexOptions& opt = {});

enum class CobarOperad { Ass, MAss };
GradedComplex build_cobar_complex(int n, CobarOperad operad, const ComplexOptions& opt = {});

/// Builds the complex on an already enumerated family.
GradedComplex build_complex_from_family(const GraphFamily& family, const ComplexOptions& opt = {});

/// Matrix of the differential from degree s to s+1. Degrees just outside
/// the range have empty bases, so s = min_degree - 1 and s = max_degree give
/// matrices with no columns or no rows.
SparseIntMatrix differential_matrix(const GradedComplex& c, int s);

/// Checks that consecutive differentials compose to zero; marks the complex
/// validated on success.
bool verify_d_squared(GradedComplex& c);

/// b_s = dim_s - rank(d_s) - rank(d_{s-1}). Requires verify_d_squared.
std::map<int, std::size_t> betti_numbers(const GradedComplex& c);
long long euler_characteristic(const GradedComplex& c);

/// Coefficients of the image of one basis element under contraction, i.e. a
/// row of the differential matrix, as (column, value) pairs in degree s-1.
std::vector<std::pair<int, long long>> contraction_row(const GradedComplex& c, int s, std::size_t i);

/// Where an oriented graph sits in the complex: g = sign * basis element
/// `index` of degree edge_count(g). index is -1 for graphs outside the
/// basis; `excluded` tells whether that is because of an orientation-reversing
/// automorphism. Dianalytic graphs are read with their colours forgotten.
struct BasisCoordinate {
  CanonicalCode code;
  long index = -1;
  int sign = 0;
  bool excluded = false;
};
BasisCoordinate basis_coordinate(const GradedComplex& c, const HalfEdgeGraph& g, const Orientation& o);

nlohmann::json complex_to_json(const GradedComplex& c);

}  // namespace klein
