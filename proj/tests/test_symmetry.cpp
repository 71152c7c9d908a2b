#include <set>

#include "doctest.h"
#include "klein/canonical.hpp"
#include "klein/enumerate.hpp"
#include "oracle/naive.hpp"
#include "support.hpp"

using namespace klein;

namespace {

std::vector<HalfEdgeGraph> sample_graphs(GraphVariant v) {
  std::vector<HalfEdgeGraph> out;
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 0}, {0, 5}, {2, 1}}) {
    const GraphFamily f = enumerate_graphs({g, n, v, std::nullopt});
    for (const auto& level : f.levels)
      for (const auto& c : level) out.push_back(decode(c));
  }
  return out;
}

}  // namespace

TEST_CASE("canonical codes are invariant under relabelling") {
  auto rng = test_rng(2);
  for (GraphVariant v : {GraphVariant::ribbon, GraphVariant::moebius, GraphVariant::dianalytic}) {
    for (const auto& g : sample_graphs(v)) {
      const auto c = canonical_code(g, v);
      CHECK(canonical_code(decode(c), v) == c);
      CHECK(canonical_code(shuffled(g, rng), v) == c);
    }
  }
}

TEST_CASE("canonical codes agree with the exhaustive oracle on small graphs") {
  for (GraphVariant v : {GraphVariant::ribbon, GraphVariant::moebius, GraphVariant::dianalytic}) {
    const GraphFamily f = enumerate_graphs({1, 2, v, std::nullopt});
    std::set<std::string> seen;
    for (const auto& level : f.levels)
      for (const auto& c : level) CHECK(seen.insert(oracle::naive_canonical(decode(c), v)).second);
  }
}

TEST_CASE("isomorphism respects the variant") {
  const auto a = one_vertex_graph({{1}, {2}, {3}, {4}});
  const auto rev = one_vertex_graph({{4}, {3}, {2}, {1}});
  CHECK_FALSE(isomorphic(a, rev, GraphVariant::ribbon));
  CHECK(isomorphic(a, rev, GraphVariant::dianalytic));
  // Reversal alone is not a Moebius move; reflection also flips colours.
  CHECK_FALSE(isomorphic(a, rev, GraphVariant::moebius));
  CHECK(isomorphic(a, one_vertex_graph({{4, 1}, {3, 1}, {2, 1}, {1, 1}}), GraphVariant::moebius));
  // Leg colours only matter until they are forgotten.
  const auto c = one_vertex_graph({{1, 1}, {2}, {3}, {4}});
  CHECK_FALSE(isomorphic(a, c, GraphVariant::moebius));
  CHECK(isomorphic(a, c, GraphVariant::moebius_leg_unoriented));
}

TEST_CASE("coarsening is monotone") {
  const GraphFamily f = enumerate_graphs({1, 2, GraphVariant::moebius, std::nullopt});
  std::vector<HalfEdgeGraph> gs;
  for (const auto& level : f.levels)
    for (const auto& c : level) gs.push_back(decode(c));
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i; j < gs.size(); ++j)
      if (isomorphic(gs[i], gs[j], GraphVariant::moebius)) CHECK(isomorphic(gs[i], gs[j], GraphVariant::dianalytic));
}

TEST_CASE("automorphism group orders match brute force") {
  for (GraphVariant v : {GraphVariant::ribbon, GraphVariant::moebius, GraphVariant::dianalytic}) {
    for (const auto& g : sample_graphs(v)) {
      const auto rep = automorphism_signs(g, v);
      CHECK(rep.group_order == oracle::naive_automorphism_count(g, v));
      CHECK(rep.generators.size() == rep.group_order - 1);
    }
  }
}

TEST_CASE("orientation reversing automorphisms") {
  // The theta graph has an automorphism swapping two edges, which is odd on
  // the edge ordering while fixing H1 up to an even change.
  const auto theta = graph_from_rotations({{{-1}, {-2}, {-3}}, {{-3}, {-2}, {-1}}});
  const auto rep = automorphism_signs(theta, GraphVariant::ribbon);
  CHECK(rep.group_order > 1);
  CHECK(rep.signs.size() == rep.generators.size());
  // A corolla with labelled legs has no symmetry at all.
  const auto c = automorphism_signs(one_vertex_graph({{1}, {2}, {3}}), GraphVariant::dianalytic);
  CHECK(c.group_order == 1);
  CHECK_FALSE(c.orientation_reversing_exists);
}

TEST_CASE("dianalytic reversal signs") {
  CHECK(reversal_sign(3) == -1);
  CHECK(reversal_sign(4) == 1);
  const auto g = graph_from_rotations({{{1}, {2}, {-1}}, {{-1}, {3}, {4}, {5}}});
  std::vector<int> id(g.half_edge_count());
  for (int i = 0; i < g.half_edge_count(); ++i) id[i] = i;
  CHECK(dianalytic_transport_sign(g, id, g) == 1);
}
