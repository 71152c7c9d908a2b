#include "doctest.h"
#include "klein/algebra.hpp"
#include "support.hpp"

using namespace klein;

namespace {

// Koszul sign of reversing a word, by bubbling elements past each other.
int reversal_koszul(std::vector<int> degs) {
  int sign = 1;
  const std::size_t n = degs.size();
  for (std::size_t pass = 0; pass < n; ++pass)
    for (std::size_t i = 0; i + 1 < n - pass; ++i) {
      if (degs[i] % 2 && degs[i + 1] % 2) sign = -sign;
      std::swap(degs[i], degs[i + 1]);
    }
  return sign;
}

}  // namespace

TEST_CASE("involution sign") {
  auto rng = test_rng(30);
  std::uniform_int_distribution<int> deg(-2, 2);
  for (int n = 2; n <= 7; ++n)
    for (int t = 0; t < 20; ++t) {
      std::vector<int> d(n);
      for (auto& x : d) x = deg(rng);
      const int arity = (n * (n + 1) / 2 - 1) % 2 ? -1 : 1;
      CHECK(involution_sign(d) == reversal_koszul(d) * arity);
    }
  CHECK(involution_sign({0, 0}) == 1);
  CHECK(involution_sign({0, 0, 0}) == -1);
}

TEST_CASE("open KTFT examples") {
  CHECK(check_frobenius_involution(matrix_algebra_transpose()).pass());
  CHECK(check_frobenius_involution(cyclic_group_algebra(3)).pass());
  CHECK(check_frobenius_involution(cyclic_group_algebra(5)).pass());
  const auto bad = check_frobenius_involution(matrix_algebra_identity_involution());
  CHECK_FALSE(bad.pass());
  CHECK_FALSE(bad.get("anti_automorphism").ok);
  CHECK(bad.get("associativity").ok);
  // E12 E21 = E11 but (E21)(E12) = E22: the witness pair is recorded.
  CHECK_FALSE(bad.get("anti_automorphism").witnesses.empty());
  CHECK_THROWS_AS(bad.get("nope"), std::out_of_range);
}

TEST_CASE("graded and higher examples") {
  CHECK(check_involutive_ainfty_signs(exterior_algebra_two_odd()).pass());
  CHECK(check_involutive_ainfty_signs(square_zero_m3(-1)).pass());
  const auto wrong = check_involutive_ainfty_signs(square_zero_m3(1));
  CHECK_FALSE(wrong.pass());
  CHECK_FALSE(wrong.get("involution_sign_3").ok);
  CHECK(wrong.get("stasheff_4").ok);
}

TEST_CASE("broken associativity is caught") {
  auto t = cyclic_group_algebra(3);
  t.mult[1][1] = RVec(3, 0);
  t.mult[1][1][0] = 1;  // g1 g1 = g0 instead of g2
  const auto r = check_frobenius_involution(t);
  CHECK_FALSE(r.get("associativity").ok);
}

TEST_CASE("tables round trip through JSON") {
  for (const auto& t : {matrix_algebra_transpose(), exterior_algebra_two_odd(), square_zero_m3(-1)}) {
    const auto j = table_to_json(t);
    const auto back = table_from_json(j);
    CHECK(back.dim == t.dim);
    CHECK(back.mult == t.mult);
    CHECK(back.form == t.form);
    CHECK(back.inv == t.inv);
    CHECK(back.grading == t.grading);
    CHECK(back.higher == t.higher);
    CHECK(table_to_json(back) == j);
  }
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(nlohmann::json(-4)) == -4);
}

TEST_CASE("malformed tables") {
  using nlohmann::json;
  CHECK_THROWS_AS(table_from_json(json::parse(R"({"mult": []})")), MalformedTable);
  CHECK_THROWS_AS(table_from_json(json::parse(R"({"dim": 0})")), MalformedTable);
  auto j = table_to_json(cyclic_group_algebra(2));
  j["form"].erase(0);
  CHECK_THROWS_AS(table_from_json(j), MalformedTable);
  auto k = table_to_json(cyclic_group_algebra(2));
  k["inv"][0][0] = "1/0";
  CHECK_THROWS_AS(table_from_json(k), MalformedTable);
}
