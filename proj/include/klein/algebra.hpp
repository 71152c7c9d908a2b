#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace klein {

class MalformedTable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;
using RVec = std::vector<Rational>;

/// A finite-dimensional algebra given on a basis e_0..e_{d-1}.
///
/// `mult[i][j]` is the coordinate vector of e_i e_j, `form[i][j]` the value
/// of the bilinear form and `inv[i]` the coordinate vector of e_i^*.
/// `higher[k]` holds m_k for k >= 3, indexed by the flattened tuple
/// i_1 d^(k-1) + ... + i_k. An empty grading means everything sits in degree 0.
struct AlgebraTable {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<RVec>> mult;
  std::vector<RVec> form;
  std::vector<RVec> inv;
  std::vector<int> grading;
  std::map<int, std::vector<RVec>> higher;

  int degree(int i) const { return grading.empty() ? 0 : grading[i]; }
  /// Highest k with m_k supplied (2 if there are no higher operations).
  int top_arity() const { return higher.empty() ? 2 : higher.rbegin()->first; }
  /// m_k on a tuple of basis indices; zero if m_k is not supplied.
  RVec operation(const std::vector<int>& args) const;
  std::string label(int i) const { return labels.empty() ? "e" + std::to_string(i) : labels[i]; }
};

/// Reads {"dim", "mult", "form", "inv", optional "labels", "grading",
/// "higher": {"3": ...}}; coefficients are integers or "p/q" strings.
AlgebraTable table_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const AlgebraTable& t);

/// Parses "p/q", "p" or a JSON number.
Rational parse_rational(const nlohmann::json& v);

struct AxiomCheck {
  AxiomCheck() = default;
  explicit AxiomCheck(std::string n) : name(std::move(n)) {}
  std::string name;
  bool ok = true;
  /// Basis tuples on which the axiom fails.
  std::vector<std::vector<int>> witnesses;
};

struct AlgebraReport {
  std::vector<AxiomCheck> checks;
  bool pass() const;
  const AxiomCheck& get(const std::string& name) const;
  nlohmann::json to_json(const AlgebraTable& t) const;
};

/// Open KTFT axioms: associativity; a symmetric, nondegenerate, invariant
/// form; an involutive anti-automorphism preserving the form. With a grading
/// the anti-automorphism law carries the Koszul sign.
AlgebraReport check_frobenius_involution(const AlgebraTable& a);

/// The A-infinity relations up to arity top_arity()+1 and, for every
/// supplied m_n, the involution law
///   m_n(x_1..x_n)^* = (-1)^eps (-1)^(n(n+1)/2 - 1) m_n(x_n^*..x_1^*)
/// with eps = sum_i |x_i| sum_{j>i} |x_j|.
AlgebraReport check_involutive_ainfty_signs(const AlgebraTable& a);

/// Sign of the involution law for the given degrees.
int involution_sign(const std::vector<int>& degrees);

/// Built-in examples.
AlgebraTable matrix_algebra_transpose();
AlgebraTable matrix_algebra_identity_involution();
AlgebraTable cyclic_group_algebra(int order);
AlgebraTable exterior_algebra_two_odd();
/// {x, y} with |x| = 0, |y| = -1, only m_3(x,x,x) = y, x^* = x, y^* = y_sign y.
AlgebraTable square_zero_m3(int y_sign);

}  // namespace klein
