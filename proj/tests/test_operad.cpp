#include "doctest.h"
#include "klein/canonical.hpp"
#include "klein/operad.hpp"
#include "klein/surface.hpp"
#include "klein/verify.hpp"
#include "oracle/naive.hpp"
#include "support.hpp"

using namespace klein;

TEST_CASE("corolla bases") {
  for (int n = 1; n <= 4; ++n)
    CHECK(static_cast<long long>(mass_basis(n).size()) == (1ll << n) * oracle::factorial(n));
  const auto a = mass_involution();
  CHECK(a.arity() == 1);
  CHECK(a.colors[1] == 1);
  const auto p = mass_planar(3);
  CHECK(MobiusCorolla::from_graph(p.graph()) == p);
}

TEST_CASE("composition agrees with grafting words") {
  for (const auto& x : mass_basis(2))
    for (const auto& y : mass_basis(3))
      for (int i = 1; i <= 2; ++i) CHECK(compose_single(x, i, y) == oracle::word_compose(x, i, y));
  auto rng = test_rng(20);
  const auto b3 = mass_basis(3), b2 = mass_basis(2);
  std::uniform_int_distribution<std::size_t> pick3(0, b3.size() - 1), pick2(0, b2.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto& x = b3[pick3(rng)];
    const auto& y = b2[pick2(rng)];
    const int i = 1 + t % 3;
    CHECK(compose_single(x, i, y) == oracle::word_compose(x, i, y));
  }
  CHECK_THROWS_AS(compose_single(mass_planar(2), 3, mass_planar(2)), PositionOutOfRange);
}

TEST_CASE("composition is associative and the involution squares to one") {
  const auto a = mass_involution();
  const auto one = MobiusCorolla::make({1}, {0, 0});
  CHECK(compose_single(a, 1, a) == one);
  for (const auto& x : mass_basis(2))
    for (const auto& y : mass_basis(2))
      for (const auto& z : mass_basis(2)) {
        // Sequential: (x o_1 y) o_3 z = x o_2 z shifted
        CHECK(compose_single(compose_single(x, 1, y), 3, z) == compose_single(compose_single(x, 2, z), 1, y));
        // Nested: (x o_1 y) o_1 z = x o_1 (y o_1 z)
        CHECK(compose_single(compose_single(x, 1, y), 1, z) == compose_single(x, 1, compose_single(y, 1, z)));
      }
}

TEST_CASE("the involution reverses a corolla") {
  // a o_1 m reads m backwards with every colour flipped, which is m itself
  // up to the reflection pair, with the output coloured.
  const auto m = mass_planar(3);
  const auto r = compose_single(mass_involution(), 1, m);
  CHECK(r != m);
  CHECK(compose_single(mass_involution(), 1, r) == m);
  const auto perm = relabel_inputs(m, {3, 2, 1});
  CHECK(perm.order == std::vector<int>{3, 2, 1});
}

TEST_CASE("Koszul complexes are acyclic below the top") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const auto k = koszul_check(n);
    CHECK(k.d_squared);
    CHECK(k.dims_split);
    CHECK(k.concentrated);
    CHECK(k.top_dims);
    CHECK(k.betti_ass.back() == static_cast<std::size_t>(oracle::factorial(n)));
  }
}

TEST_CASE("quadratic dual") {
  const auto d = quadratic_duality_check();
  CHECK(d.dim_free == 96);
  CHECK(d.dim_relations == 48);
  CHECK(d.dim_image == 48);
  CHECK(d.dim_annihilator == 48);
  CHECK(d.pass());
}

TEST_CASE("closure classes are the surface types") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 0}, {2, 1}}) {
    CAPTURE(g);
    CAPTURE(n);
    const auto rep = closure_classes(g, n);
    CHECK(rep.exact);
    CHECK_FALSE(rep.invariant_violation);
    for (const auto& c : rep.classes) CHECK(2 * c.surface.handles + c.surface.crosscaps + c.surface.boundaries - 1 == g);
  }
  // Genus 1 with one leg: the Moebius band and the annulus.
  const auto r11 = closure_classes(1, 1);
  CHECK(r11.classes.size() == 2);
}

TEST_CASE("closure witnesses merge") {
  for (const auto& w : closure_witnesses()) {
    CAPTURE(w.name);
    CHECK(w.merged);
    CHECK(surface_type(w.left).handles * 2 + surface_type(w.left).crosscaps ==
          surface_type(w.right).handles * 2 + surface_type(w.right).crosscaps);
  }
}

TEST_CASE("slide moves keep the surface") {
  const auto g = one_vertex_graph({{1}, {-1, 0}, {-2, 0}, {-1, 1}, {-2, 1}});
  const auto t = surface_type(g);
  const auto moves = slide_moves(g);
  CHECK_FALSE(moves.empty());
  for (const auto& x : moves) {
    CHECK(x.vertex_count() == 1);
    CHECK(surface_type(x).boundary_partition() == t.boundary_partition());
    CHECK(surface_type(x).crosscaps == t.crosscaps);
  }
  CHECK_THROWS_AS(slide_moves(graph_from_rotations({{{1}, {2}, {-1}}, {{-1}, {3}, {4}}})), NotOneVertex);
}

TEST_CASE("normal forms") {
  auto rng = test_rng(21);
  const auto three = one_vertex_graph({{1, 0}, {-1, 0}, {-2, 0}, {-1, 1}, {-3, 0}, {-2, 1}, {-3, 1}});
  for (const auto& g : {three, shuffled(three, rng), one_vertex_graph({{-1, 0}, {1}, {-2, 0}, {-1, 1}, {-2, 1}})}) {
    const auto nf = normal_form(g);
    CHECK(is_normal_shape(nf.graph));
    REQUIRE_FALSE(nf.trace.empty());
    CHECK(nf.trace.front() == g);
    CHECK(surface_type(nf.graph).crosscaps == surface_type(g).crosscaps);
    CHECK(surface_type(nf.graph).handles == surface_type(g).handles);
    for (std::size_t i = 1; i < nf.trace.size(); ++i) {
      bool adjacent = false;
      for (const auto& m : slide_moves(nf.trace[i - 1]))
        adjacent = adjacent || isomorphic(m, nf.trace[i], GraphVariant::moebius);
      CHECK(adjacent);
    }
  }
}
