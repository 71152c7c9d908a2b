#include "doctest.h"
#include "klein/enumerate.hpp"
#include "klein/surface.hpp"
#include "klein/verify.hpp"
#include "oracle/naive.hpp"
#include "support.hpp"

using namespace klein;

TEST_CASE("basic surfaces") {
  const auto b = basic_surfaces();
  CHECK(b.ok());
  CHECK(b.handle.orientable());
  CHECK_FALSE(b.crosscap.orientable());
  CHECK(b.annulus.boundaries == 2);
}

TEST_CASE("surface types agree with the Euler characteristic oracle") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {3, 0}, {0, 5}, {2, 2}}) {
    const GraphFamily f = enumerate_graphs({g, n, GraphVariant::moebius, std::nullopt});
    for (const auto& level : f.levels) {
      for (const auto& code : level) {
        const HalfEdgeGraph x = decode(code);
        const SurfaceType t = surface_type(x);
        const auto [m, u, h] = oracle::naive_surface(x);
        CHECK(t.handles == m);
        CHECK(t.crosscaps == u);
        CHECK(t.boundaries == h);
        CHECK(2 * m + u + h - 1 == g);
      }
    }
  }
}

TEST_CASE("legs on the boundary") {
  // A twisted loop between legs 1 and 2 sends leg 2 round the crosscap.
  const auto t = surface_type(one_vertex_graph({{1}, {-1, 0}, {2}, {-1, 1}}));
  CHECK(t.boundaries == 1);
  CHECK(t.boundary_legs.size() == 1);
  CHECK(t.boundary_legs[0].size() == 2);
  // An untwisted loop separating the legs gives an annulus with one leg on
  // each boundary.
  const auto a = surface_type(one_vertex_graph({{1}, {-1}, {2}, {-1}}));
  CHECK(a.handles == 0);
  CHECK(a.boundaries == 2);
  CHECK(a.boundary_partition() != surface_type(one_vertex_graph({{1}, {2}, {-1}, {-1}})).boundary_partition());
}

TEST_CASE("boundary walks visit every side once per direction") {
  const auto g = graph_from_rotations({{{1}, {-1, 0}, {2}, {-2, 0}}, {{-1, 1}, {-2, 0}, {3}}});
  std::size_t states = 0;
  for (const auto& w : boundary_walk(g)) states += w.size();
  CHECK(states == 2 * static_cast<std::size_t>(g.half_edge_count()));
}

TEST_CASE("orienting gauge") {
  const auto twisted_pair = graph_from_rotations({{{1}, {-1, 0}, {2}, {-2, 1}}, {{-1, 1}, {-2, 0}, {3}}});
  const auto gauge = orienting_gauge(twisted_pair);
  CHECK_FALSE(gauge.empty());
  CHECK(orienting_gauge(one_vertex_graph({{1}, {-1, 0}, {-1, 1}})).empty());
}

TEST_CASE("enumeration counts match the naive generator") {
  struct Case {
    int genus, legs;
    GraphVariant v;
  };
  for (const Case& c : std::vector<Case>{{0, 4, GraphVariant::ribbon},
                                         {0, 5, GraphVariant::ribbon},
                                         {1, 1, GraphVariant::ribbon},
                                         {1, 2, GraphVariant::ribbon},
                                         {2, 0, GraphVariant::ribbon},
                                         {1, 3, GraphVariant::ribbon},
                                         {0, 4, GraphVariant::moebius},
                                         {1, 1, GraphVariant::moebius},
                                         {1, 2, GraphVariant::moebius},
                                         {2, 0, GraphVariant::moebius},
                                         {0, 5, GraphVariant::dianalytic},
                                         {1, 2, GraphVariant::dianalytic},
                                         {2, 0, GraphVariant::dianalytic}}) {
    CAPTURE(c.genus);
    CAPTURE(c.legs);
    CAPTURE(to_string(c.v));
    const auto naive = oracle::naive_counts(c.genus, c.legs, c.v);
    const auto sizes = level_sizes(enumerate_graphs({c.genus, c.legs, c.v, std::nullopt}));
    std::map<int, std::size_t> got;
    for (std::size_t e = 0; e < sizes.size(); ++e)
      if (sizes[e]) got[static_cast<int>(e)] = sizes[e];
    CHECK(got == naive);
  }
}

TEST_CASE("one ribbon graph of genus 1 with one leg") {
  CHECK(enumerate_graphs({1, 1, GraphVariant::ribbon, std::nullopt}).total() == 1);
}

TEST_CASE("variant counts are ordered") {
  const auto r = enumerate_graphs({2, 1, GraphVariant::ribbon, std::nullopt});
  const auto m = enumerate_graphs({2, 1, GraphVariant::moebius, std::nullopt});
  const auto d = enumerate_graphs({2, 1, GraphVariant::dianalytic, std::nullopt});
  const auto rs = level_sizes(r), ms = level_sizes(m), ds = level_sizes(d);
  for (std::size_t e = 0; e < rs.size(); ++e) {
    const int h = 2 * static_cast<int>(e) + 1;
    CHECK(ms[e] <= (std::size_t{1} << h) * rs[e]);
    CHECK(ds[e] <= ms[e]);
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  const EnumerationQuery q{2, 2, GraphVariant::moebius, std::nullopt};
  CHECK(enumerate_graphs(q, Exec::serial).levels == enumerate_graphs(q, Exec::parallel).levels);
}

TEST_CASE("topological filter and budget") {
  EnumerationQuery q{1, 2, GraphVariant::moebius, TopologicalFilter{0, 1, 1}};
  const auto f = enumerate_graphs(q);
  for (const auto& level : f.levels)
    for (const auto& c : level) CHECK(q.filter->matches(surface_type(decode(c))));
  EnumerationQuery big{2, 3, GraphVariant::moebius, std::nullopt};
  big.max_graphs = 100;
  CHECK_THROWS_AS(enumerate_graphs(big), EnumerationBudgetExceeded);
  CHECK_THROWS_AS(enumerate_graphs({0, 5, GraphVariant::dianalytic, TopologicalFilter{}}), std::invalid_argument);
}

TEST_CASE("trees") {
  // Planar trees with n inputs: one corolla per cyclic order fixing the root.
  const auto t = enumerate_trees(3, GraphVariant::ribbon);
  const auto sizes = level_sizes(t);
  CHECK(sizes[0] == 6);
  CHECK(sizes[1] == 12);
  const auto m = level_sizes(enumerate_trees(3, GraphVariant::moebius));
  CHECK(m[0] == 48);
  CHECK(m[1] == 96);
}

TEST_CASE("basic surfaces carry their leg") {
  const auto b = basic_surfaces();
  CHECK(b.handle.boundary_legs.size() == 1);
  CHECK(b.crosscap.boundary_legs.size() == 1);
  REQUIRE(b.annulus.boundary_legs.size() == 2);
  CHECK(b.annulus.boundary_legs[0].size() + b.annulus.boundary_legs[1].size() == 1);
}
