#include "klein/complex.hpp"

#include <algorithm>

#include <omp.h>

namespace klein {

std::size_t GradedComplex::dim(int s) const { return basis(s).size(); }

const std::vector<CanonicalCode>& GradedComplex::basis(int s) const {
  static const std::vector<CanonicalCode> empty;
  const int i = s - min_degree;
  if (i < 0 || i >= static_cast<int>(bases.size())) return empty;
  return bases[i];
}

long GradedComplex::index_of(int s, const CanonicalCode& c) const {
  const auto& b = basis(s);
  const auto it = std::lower_bound(b.begin(), b.end(), c);
  return (it != b.end() && *it == c) ? static_cast<long>(it - b.begin()) : -1;
}

namespace {

Orientation orientation_for(const HalfEdgeGraph& g, const CanonicalCode& code, std::uint64_t seed) {
  Orientation o = reference_orientation(g);
  if (seed == 0) return o;
  return perturbed_orientation(o, seed ^ (code.hash() * 0x9e3779b97f4a7c15ull));
}

bool in_sorted(const std::vector<CanonicalCode>& v, const CanonicalCode& c) {
  return std::binary_search(v.begin(), v.end(), c);
}

const std::vector<CanonicalCode>& excluded_at(const GradedComplex& c, int s) {
  static const std::vector<CanonicalCode> empty;
  const int i = s - c.min_degree;
  if (i < 0 || i >= static_cast<int>(c.excluded.size())) return empty;
  return c.excluded[i];
}

}  // namespace

OrientedBasisElement GradedComplex::element(int s, std::size_t i) const {
  const CanonicalCode& code = basis(s).at(i);
  HalfEdgeGraph g = decode(code);
  Orientation o = orientation_for(g, code, orientation_seed);
  return {std::move(g), std::move(o)};
}

BasisCoordinate basis_coordinate(const GradedComplex& c, const HalfEdgeGraph& g, const Orientation& o) {
  BasisCoordinate r;
  const int s = g.edge_count();
  const CanonicalForm f = canonical_form(g, c.variant, false);
  r.code = f.code;
  r.index = c.index_of(s, f.code);
  if (r.index < 0) {
    r.excluded = in_sorted(excluded_at(c, s), f.code);
    return r;
  }
  const HalfEdgeGraph target = decode(f.code);
  const Orientation tor = orientation_for(target, f.code, c.orientation_seed);
  r.sign = transport_sign(g, o, f.labelings.front(), target, tor);
  if (c.variant == GraphVariant::dianalytic) r.sign *= dianalytic_transport_sign(g, f.labelings.front(), target);
  return r;
}

std::vector<std::pair<int, long long>> contraction_row(const GradedComplex& c, int s, std::size_t i) {
  const OrientedBasisElement src = c.element(s, i);
  const HalfEdgeGraph& g = src.graph;
  std::vector<std::pair<int, long long>> row;
  // A dianalytic edge carries no twist, so both ways of gluing its ends
  // together are contractions of it.
  const int parities = c.variant == GraphVariant::dianalytic ? 2 : 1;
  for (int h : g.edges()) {
    if (g.is_loop(h)) continue;
    for (int parity = 0; parity < parities; ++parity) {
      HalfEdgeGraph base = g;
      if (parity) {
        GraphData d = g.data();
        d.color[g.pairing(h)] ^= 1;
        base = HalfEdgeGraph::validate(std::move(d));
      }
      const ContractionResult k = contract_edge(base, h);
      const InducedOrientation ind = induced_orientation(src.orientation, h, k.half_edge_map, g);
      const BasisCoordinate bc = basis_coordinate(c, k.graph, ind.orientation);
      if (bc.index < 0) {
        if (!bc.excluded) throw std::logic_error("contraction leaves the enumerated family: " + bc.code.hex());
        continue;
      }
      int sign = ind.sign * bc.sign;
      if (c.variant == GraphVariant::dianalytic) {
        // The other gluing reverses the far endpoint.
        if (parity) sign *= reversal_sign(g.valence(g.vertex_of(g.pairing(h))));
      }
      const long col = bc.index;
      row.emplace_back(static_cast<int>(col), sign);
    }
  }
  std::sort(row.begin(), row.end());
  std::vector<std::pair<int, long long>> merged;
  for (const auto& [col, v] : row) {
    if (!merged.empty() && merged.back().first == col) {
      merged.back().second += v;
    } else {
      merged.emplace_back(col, v);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second == 0; }),
               merged.end());
  return merged;
}

GradedComplex build_complex_from_family(const GraphFamily& family, const ComplexOptions& opt) {
  GradedComplex c;
  c.variant = family.query.variant;
  c.genus = family.query.genus;
  c.legs = family.query.legs;
  c.filter = family.query.filter;
  c.orientation_seed = opt.orientation_seed;
  c.min_degree = family.min_edges;
  c.label = std::string(to_string(c.variant)) + " genus " + std::to_string(c.genus) + " legs " +
            std::to_string(c.legs);
  const bool par = opt.exec == Exec::parallel;

  for (const auto& level : family.levels) {
    std::vector<char> reversing(level.size(), 0);
#pragma omp parallel for schedule(dynamic, 64) if (par)
    for (std::size_t i = 0; i < level.size(); ++i) {
      reversing[i] = automorphism_signs(decode(level[i]), c.variant).orientation_reversing_exists;
    }
    std::vector<CanonicalCode> keep, drop;
    for (std::size_t i = 0; i < level.size(); ++i) (reversing[i] ? drop : keep).push_back(level[i]);
    c.bases.push_back(std::move(keep));
    c.excluded.push_back(std::move(drop));
  }

  for (int s = c.min_degree; s < c.max_degree(); ++s) {
    const std::size_t rows = c.dim(s + 1);
    std::vector<std::vector<std::pair<int, long long>>> row_data(rows);
#pragma omp parallel for schedule(dynamic, 32) if (par)
    for (std::size_t i = 0; i < rows; ++i) row_data[i] = contraction_row(c, s + 1, i);
    SparseIntMatrix m;
    m.rows = static_cast<int>(rows);
    m.cols = static_cast<int>(c.dim(s));
    for (std::size_t i = 0; i < rows; ++i) {
      for (const auto& [col, v] : row_data[i]) m.entries.push_back({static_cast<int>(i), col, v});
    }
    c.differentials.push_back(std::move(m));
  }
  return c;
}

GradedComplex build_graph_complex(const EnumerationQuery& q, const ComplexOptions& opt) {
  return build_complex_from_family(enumerate_graphs(q, opt.exec), opt);
}

GradedComplex build_cobar_complex(int n, CobarOperad operad, const ComplexOptions& opt) {
  if (n < 2) throw std::invalid_argument("cobar complexes need n >= 2");
  const GraphVariant v = operad == CobarOperad::Ass ? GraphVariant::ribbon : GraphVariant::moebius;
  GradedComplex c = build_complex_from_family(enumerate_trees(n, v, opt.exec), opt);
  c.label = std::string(operad == CobarOperad::Ass ? "C(Ass)(" : "C(MAss)(") + std::to_string(n) + ")";
  return c;
}

SparseIntMatrix differential_matrix(const GradedComplex& c, int s) {
  if (c.bases.empty() || s < c.min_degree - 1 || s > c.max_degree()) {
    throw DegreeOutOfRange("no differential out of degree " + std::to_string(s));
  }
  if (s == c.min_degree - 1 || s == c.max_degree()) {
    SparseIntMatrix m;
    m.rows = static_cast<int>(c.dim(s + 1));
    m.cols = static_cast<int>(c.dim(s));
    return m;
  }
  return c.differentials[s - c.min_degree];
}

bool verify_d_squared(GradedComplex& c) {
  for (std::size_t i = 0; i + 1 < c.differentials.size(); ++i) {
    if (!c.differentials[i + 1].multiply(c.differentials[i]).is_zero()) return false;
  }
  c.validated = true;
  return true;
}

std::map<int, std::size_t> betti_numbers(const GradedComplex& c) {
  if (!c.validated) throw ComplexNotValidated("run verify_d_squared before computing homology");
  std::vector<std::size_t> ranks(c.differentials.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = rank(c.differentials[i]);
  std::map<int, std::size_t> b;
  for (int s = c.min_degree; s <= c.max_degree(); ++s) {
    const std::size_t i = static_cast<std::size_t>(s - c.min_degree);
    std::size_t v = c.dim(s);
    if (i < ranks.size()) v -= ranks[i];
    if (i > 0) v -= ranks[i - 1];
    b[s] = v;
  }
  return b;
}

long long euler_characteristic(const GradedComplex& c) {
  long long chi = 0;
  for (int s = c.min_degree; s <= c.max_degree(); ++s) {
    chi += (s % 2 ? -1 : 1) * static_cast<long long>(c.dim(s));
  }
  return chi;
}

nlohmann::json complex_to_json(const GradedComplex& c) {
  nlohmann::json j;
  j["label"] = c.label;
  j["variant"] = to_string(c.variant);
  j["genus"] = c.genus;
  j["legs"] = c.legs;
  j["grading"] = "internal edges (cohomological)";
  nlohmann::json degrees = nlohmann::json::array();
  for (int s = c.min_degree; s <= c.max_degree(); ++s) {
    nlohmann::json d;
    d["degree"] = s;
    d["dim"] = c.dim(s);
    nlohmann::json codes = nlohmann::json::array();
    for (const auto& code : c.basis(s)) codes.push_back(code.hex());
    d["basis"] = codes;
    degrees.push_back(d);
  }
  j["degrees"] = degrees;
  nlohmann::json diffs = nlohmann::json::array();
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    const auto& m = c.differentials[i];
    nlohmann::json d;
    d["from"] = c.min_degree + static_cast<int>(i);
    d["rows"] = m.rows;
    d["cols"] = m.cols;
    nlohmann::json e = nlohmann::json::array();
    for (const auto& x : m.entries) e.push_back({x.row, x.col, x.value});
    d["entries"] = e;
    diffs.push_back(d);
  }
  j["differentials"] = diffs;
  return j;
}

}  // namespace klein
