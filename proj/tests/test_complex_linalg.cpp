#include <gmpxx.h>

#include <string>

#include "doctest.h"
#include "klein/complex.hpp"
#include "klein/linalg.hpp"
#include "support.hpp"

using namespace klein;

namespace {

// Plain dense elimination over Q, the slowest and least clever rank there is.
std::size_t oracle_rank(const SparseIntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows, std::vector<mpq_class>(m.cols));
  for (const auto& e : m.entries) a[e.row][e.col] = mpz_class(std::to_string(e.value));
  std::size_t r = 0;
  for (int c = 0; c < m.cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (int k = c; k < m.cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

SparseIntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int density, long long big) {
  SparseIntMatrix m{rows, cols, {}};
  std::uniform_int_distribution<int> pct(0, 99);
  std::uniform_int_distribution<long long> val(-big, big);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (pct(rng) < density) m.entries.push_back({i, j, val(rng)});
  m.normalize();
  return m;
}

}  // namespace

TEST_CASE("rank agrees across implementations") {
  auto rng = test_rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + trial % 13, cols = 1 + (trial * 7) % 11;
    const long long big = trial % 3 == 0 ? (1ll << 40) : 3;
    auto m = random_matrix(rng, rows, cols, 35, big);
    // Force dependent rows now and then.
    if (trial % 4 == 0 && rows > 2) {
      for (const auto& e : std::vector<MatrixEntry>(m.entries))
        if (e.row == 0) m.entries.push_back({rows - 1, e.col, 2 * e.value});
      m.entries.erase(std::remove_if(m.entries.begin(), m.entries.end(),
                                     [&](const MatrixEntry& e) { return e.row == rows - 1 && e.value % 2 != 0; }),
                      m.entries.end());
      m.normalize();
    }
    const std::size_t want = oracle_rank(m);
    CHECK(rank(m) == want);
    CHECK(rank_bigint(m) == want);
    CHECK(rank(m.transpose()) == want);
    CHECK(rank_mod_p(m, 1000003) <= want);
    CHECK(dense_rank_mod_p(m, 1000003) == rank_mod_p(m, 1000003));
  }
}

TEST_CASE("overflowing entries are handled exactly") {
  // Rows (a, b), (b, c) with a c - b^2 = 1 and huge entries.
  const long long a = 3037000499ll, b = 3037000500ll;
  SparseIntMatrix m{2, 2, {{0, 0, b}, {0, 1, a}, {1, 0, b + 1}, {1, 1, b}}};
  m.normalize();
  CHECK(rank(m) == oracle_rank(m));
  SparseIntMatrix sq{2, 2, {{0, 0, b}, {0, 1, b}, {1, 0, b}, {1, 1, b}}};
  sq.normalize();
  CHECK(rank(sq) == 1);
}

TEST_CASE("multiply and transpose") {
  SparseIntMatrix a{2, 3, {{0, 0, 1}, {0, 2, 2}, {1, 1, -1}}};
  SparseIntMatrix b{3, 1, {{0, 0, 2}, {2, 0, -1}}};
  const auto p = a.multiply(b);
  CHECK(p.rows == 2);
  CHECK(p.cols == 1);
  CHECK(p.is_zero());
  CHECK(a.transpose().transpose().entries == a.entries);
}

TEST_CASE("d squared vanishes and serial matches parallel") {
  for (GraphVariant v : {GraphVariant::ribbon, GraphVariant::moebius, GraphVariant::dianalytic}) {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 0}, {0, 5}, {2, 1}, {1, 3}}) {
      CAPTURE(to_string(v));
      CAPTURE(g);
      CAPTURE(n);
      const EnumerationQuery q{g, n, v, std::nullopt};
      auto par = build_graph_complex(q, {Exec::parallel, 0});
      auto ser = build_graph_complex(q, {Exec::serial, 0});
      CHECK(verify_d_squared(par));
      CHECK(par.bases == ser.bases);
      REQUIRE(par.differentials.size() == ser.differentials.size());
      for (std::size_t i = 0; i < par.differentials.size(); ++i)
        CHECK(par.differentials[i].entries == ser.differentials[i].entries);
    }
  }
}

TEST_CASE("perturbed orientations give the same homology") {
  auto rng = test_rng(11);
  for (GraphVariant v : {GraphVariant::ribbon, GraphVariant::moebius, GraphVariant::dianalytic}) {
    const EnumerationQuery q{1, 3, v, std::nullopt};
    auto plain = build_graph_complex(q);
    auto bent = build_graph_complex(q, {Exec::parallel, rng() | 1});
    REQUIRE(verify_d_squared(plain));
    REQUIRE(verify_d_squared(bent));
    CHECK(betti_numbers(plain) == betti_numbers(bent));
  }
}

TEST_CASE("betti numbers need validation and degrees are checked") {
  auto c = build_graph_complex({1, 1, GraphVariant::ribbon, std::nullopt});
  CHECK_THROWS_AS(betti_numbers(c), ComplexNotValidated);
  CHECK_THROWS_AS(differential_matrix(c, c.max_degree() + 5), DegreeOutOfRange);
  CHECK(differential_matrix(c, c.max_degree()).rows == 0);
  REQUIRE(verify_d_squared(c));
  const auto b = betti_numbers(c);
  long long chi = 0;
  for (auto [s, x] : b) chi += (s % 2 ? -1 : 1) * static_cast<long long>(x);
  CHECK(chi == euler_characteristic(c));
  long long chi_dims = 0;
  for (int s = c.min_degree; s <= c.max_degree(); ++s) chi_dims += (s % 2 ? -1 : 1) * static_cast<long long>(c.dim(s));
  CHECK(chi == chi_dims);
}

TEST_CASE("top degree of the dianalytic complex is connected") {
  // H in the top edge degree is one-dimensional, the class of the sum of all
  // trivalent graphs.
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 6}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}}) {
    CAPTURE(g);
    CAPTURE(n);
    auto c = build_graph_complex({g, n, GraphVariant::dianalytic, std::nullopt});
    REQUIRE(verify_d_squared(c));
    const auto b = betti_numbers(c);
    CHECK(b.at(3 * g - 3 + n) == 1);
  }
}

TEST_CASE("dianalytic genus zero five legs") {
  auto c = build_graph_complex({0, 5, GraphVariant::dianalytic, std::nullopt});
  REQUIRE(verify_d_squared(c));
  const auto b = betti_numbers(c);
  CHECK(b.at(0) == 0);
  CHECK(b.at(1) == 4);
  CHECK(b.at(2) == 1);
}

TEST_CASE("basis coordinates") {
  for (GraphVariant v : {GraphVariant::ribbon, GraphVariant::moebius, GraphVariant::dianalytic}) {
    const auto c = build_graph_complex({1, 2, v, std::nullopt});
    for (int s = c.min_degree; s <= c.max_degree(); ++s) {
      for (std::size_t i = 0; i < c.dim(s); ++i) {
        const auto el = c.element(s, i);
        const auto bc = basis_coordinate(c, el.graph, el.orientation);
        CHECK(bc.index == static_cast<long>(i));
        CHECK(bc.sign == 1);
        if (el.orientation.edges.size() >= 2 && !bc.excluded) {
          auto swapped = el.orientation;
          std::swap(swapped.edges[0], swapped.edges[1]);
          for (auto& cyc : swapped.cycles) std::swap(cyc[0], cyc[1]);
          CHECK(basis_coordinate(c, el.graph, swapped).sign == -1);
        }
      }
    }
  }
}

TEST_CASE("cobar complexes") {
  auto a = build_cobar_complex(4, CobarOperad::Ass);
  auto m = build_cobar_complex(4, CobarOperad::MAss);
  REQUIRE(verify_d_squared(a));
  REQUIRE(verify_d_squared(m));
  for (int s = a.min_degree; s <= a.max_degree(); ++s) CHECK(m.dim(s) == 16 * a.dim(s));
  const auto j = complex_to_json(a);
  CHECK(j.at("degrees").size() == a.bases.size());
}
