#include "klein/algebra.hpp"

#include <functional>

#include "klein/linalg.hpp"

namespace klein {

using nlohmann::json;

Rational parse_rational(const json& v) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
      Rational q(v.get<std::string>());
      if (q.get_den() == 0) throw MalformedTable("zero denominator");
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
  }
  throw MalformedTable("not a rational: " + v.dump());
}

namespace {

RVec zero(int d) { return RVec(d, Rational(0)); }

RVec read_vector(const json& j, int d, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != d) throw MalformedTable(where + ": expected " + std::to_string(d) + " entries");
  RVec v;
  for (const auto& x : j) v.push_back(parse_rational(x));
  return v;
}

json write_vector(const RVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_den() == 1 ? json(x.get_num().get_si()) : json(x.get_str()));
  return out;
}

// Reads a k-fold nested table of coefficient vectors into flattened order.
void read_tensor(const json& j, int d, int depth, std::vector<RVec>& out, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != d) throw MalformedTable(where + ": table is not total on the basis");
  for (const auto& x : j) {
    if (depth == 1) {
      out.push_back(read_vector(x, d, where));
    } else {
      read_tensor(x, d, depth - 1, out, where);
    }
  }
}

json write_tensor(const std::vector<RVec>& flat, int d, int depth, std::size_t& pos) {
  json out = json::array();
  for (int i = 0; i < d; ++i) out.push_back(depth == 1 ? write_vector(flat[pos++]) : write_tensor(flat, d, depth - 1, pos));
  return out;
}

void axpy(RVec& y, const Rational& a, const RVec& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

bool is_zero(const RVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Multilinear extension of a basis operation to vector arguments.
RVec apply_linear(const AlgebraTable& a, const std::vector<RVec>& args) {
  RVec out = zero(a.dim);
  std::vector<int> idx(args.size());
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t k, Rational c) {
    if (k == args.size()) {
      axpy(out, c, a.operation(idx));
      return;
    }
    for (int i = 0; i < a.dim; ++i) {
      if (args[k][i] == 0) continue;
      idx[k] = i;
      rec(k + 1, c * args[k][i]);
    }
  };
  rec(0, Rational(1));
  return out;
}

RVec unit(int d, int i) {
  RVec v = zero(d);
  v[i] = 1;
  return v;
}

RVec apply_inv(const AlgebraTable& a, const RVec& x) {
  RVec out = zero(a.dim);
  for (int i = 0; i < a.dim; ++i) axpy(out, x[i], a.inv[i]);
  return out;
}

Rational form(const AlgebraTable& a, const RVec& x, const RVec& y) {
  Rational s = 0;
  for (int i = 0; i < a.dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < a.dim; ++j) s += x[i] * a.form[i][j] * y[j];
  }
  return s;
}

// Calls f on every tuple in {0..d-1}^k.
void for_tuples(int d, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t(k, 0);
  while (true) {
    f(t);
    int p = k - 1;
    while (p >= 0 && ++t[p] == d) t[p--] = 0;
    if (p < 0) return;
  }
}

void record(AxiomCheck& c, const std::vector<int>& w) {
  c.ok = false;
  c.witnesses.push_back(w);
}

}  // namespace

RVec AlgebraTable::operation(const std::vector<int>& args) const {
  const int k = static_cast<int>(args.size());
  if (k == 2) return mult[args[0]][args[1]];
  auto it = higher.find(k);
  if (it == higher.end()) return zero(dim);
  std::size_t flat = 0;
  for (int i : args) flat = flat * dim + i;
  return it->second[flat];
}

AlgebraTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) throw MalformedTable("missing dim");
  AlgebraTable t;
  t.dim = j["dim"].get<int>();
  if (t.dim <= 0) throw MalformedTable("dim must be positive");
  const int d = t.dim;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != d) throw MalformedTable("labels: wrong length");
    for (const auto& l : j["labels"]) t.labels.push_back(l.get<std::string>());
  }
  std::vector<RVec> flat;
  if (!j.contains("mult")) throw MalformedTable("missing mult");
  read_tensor(j["mult"], d, 2, flat, "mult");
  t.mult.assign(d, {});
  for (int i = 0; i < d; ++i) t.mult[i].assign(flat.begin() + i * d, flat.begin() + (i + 1) * d);
  if (!j.contains("form")) throw MalformedTable("missing form");
  if (!j["form"].is_array() || static_cast<int>(j["form"].size()) != d) throw MalformedTable("form: wrong size");
  for (const auto& row : j["form"]) t.form.push_back(read_vector(row, d, "form"));
  if (!j.contains("inv")) throw MalformedTable("missing inv");
  if (!j["inv"].is_array() || static_cast<int>(j["inv"].size()) != d) throw MalformedTable("inv: wrong size");
  for (const auto& row : j["inv"]) t.inv.push_back(read_vector(row, d, "inv"));
  if (j.contains("grading")) {
    if (!j["grading"].is_array() || static_cast<int>(j["grading"].size()) != d) throw MalformedTable("grading: wrong length");
    for (const auto& g : j["grading"]) {
      if (!g.is_number_integer()) throw MalformedTable("grading entries are integers");
      t.grading.push_back(g.get<int>());
    }
  }
  if (j.contains("higher")) {
    if (!j["higher"].is_object()) throw MalformedTable("higher must be an object");
    for (const auto& [key, val] : j["higher"].items()) {
      int k = 0;
      try {
        k = std::stoi(key);
      } catch (const std::exception&) {
        throw MalformedTable("higher: bad arity " + key);
      }
      if (k < 3 || k > 8) throw MalformedTable("higher: arity must be between 3 and 8");
      std::vector<RVec> op;
      read_tensor(val, d, k, op, "higher." + key);
      t.higher[k] = std::move(op);
    }
  }
  return t;
}

json table_to_json(const AlgebraTable& t) {
  json j;
  j["dim"] = t.dim;
  if (!t.labels.empty()) j["labels"] = t.labels;
  std::vector<RVec> flat;
  for (const auto& row : t.mult) flat.insert(flat.end(), row.begin(), row.end());
  std::size_t pos = 0;
  j["mult"] = write_tensor(flat, t.dim, 2, pos);
  j["form"] = json::array();
  for (const auto& r : t.form) j["form"].push_back(write_vector(r));
  j["inv"] = json::array();
  for (const auto& r : t.inv) j["inv"].push_back(write_vector(r));
  if (!t.grading.empty()) j["grading"] = t.grading;
  for (const auto& [k, op] : t.higher) {
    pos = 0;
    j["higher"][std::to_string(k)] = write_tensor(op, t.dim, k, pos);
  }
  return j;
}

bool AlgebraReport::pass() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

const AxiomCheck& AlgebraReport::get(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

json AlgebraReport::to_json(const AlgebraTable& t) const {
  json out = json::array();
  for (const auto& c : checks) {
    json w = json::array();
    for (const auto& tuple : c.witnesses) {
      json names = json::array();
      for (int i : tuple) names.push_back(t.label(i));
      w.push_back(names);
    }
    out.push_back({{"check", c.name}, {"ok", c.ok}, {"witnesses", w}});
  }
  return {{"pass", pass()}, {"checks", out}};
}

int involution_sign(const std::vector<int>& degrees) {
  const long n = static_cast<long>(degrees.size());
  long eps = 0;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) eps += static_cast<long>(degrees[i]) * degrees[j];
  const long e = eps + n * (n + 1) / 2 - 1;
  return (e % 2 == 0) ? 1 : -1;
}

AlgebraReport check_frobenius_involution(const AlgebraTable& a) {
  const int d = a.dim;
  AlgebraReport rep;
  AxiomCheck assoc{"associativity"}, sym{"form_symmetric"}, nondeg{"form_nondegenerate"}, invar{"form_invariant"},
      invol{"involutive"}, anti{"anti_automorphism"}, pres{"form_preserved"};

  for_tuples(d, 3, [&](const std::vector<int>& t) {
    const RVec xy = a.mult[t[0]][t[1]], yz = a.mult[t[1]][t[2]];
    const RVec l = apply_linear(a, {xy, unit(d, t[2])}), r = apply_linear(a, {unit(d, t[0]), yz});
    if (l != r) record(assoc, t);
    if (form(a, xy, unit(d, t[2])) != form(a, unit(d, t[0]), yz)) record(invar, t);
  });
  for_tuples(d, 2, [&](const std::vector<int>& t) {
    const int i = t[0], j = t[1];
    if (a.form[i][j] != a.form[j][i]) record(sym, t);
    // (xy)^* = (-1)^{|x||y|} y^* x^*
    RVec l = apply_inv(a, a.mult[i][j]);
    RVec r = apply_linear(a, {a.inv[j], a.inv[i]});
    if ((a.degree(i) * a.degree(j)) % 2) {
      for (auto& x : r) x = -x;
    }
    if (l != r) record(anti, t);
    if (form(a, a.inv[i], a.inv[j]) != a.form[i][j]) record(pres, t);
  });
  for (int i = 0; i < d; ++i) {
    if (apply_inv(a, a.inv[i]) != unit(d, i)) record(invol, {i});
  }
  // Nondegeneracy: clear denominators row by row and take the integer rank.
  SparseIntMatrix m;
  m.rows = m.cols = d;
  bool fits = true;
  for (int i = 0; i < d; ++i) {
    mpz_class lcm = 1;
    for (const auto& x : a.form[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    for (int j = 0; j < d; ++j) {
      mpz_class v = a.form[i][j].get_num() * (lcm / a.form[i][j].get_den());
      if (!v.fits_slong_p()) fits = false;
      if (v != 0) m.entries.push_back({i, j, v.get_si()});
    }
  }
  if (!fits) throw MalformedTable("form entries too large");
  if (rank(m) != static_cast<std::size_t>(d)) {
    nondeg.ok = false;
    nondeg.witnesses.push_back({});
  }
  rep.checks = {assoc, sym, nondeg, invar, invol, anti, pres};
  return rep;
}

AlgebraReport check_involutive_ainfty_signs(const AlgebraTable& a) {
  const int d = a.dim;
  const int top = a.top_arity();
  AlgebraReport rep;

  AxiomCheck graded{"involution_graded"};
  for (int i = 0; i < d; ++i) {
    if (apply_inv(a, a.inv[i]) != unit(d, i)) record(graded, {i});
    for (int j = 0; j < d; ++j)
      if (a.inv[i][j] != 0 && a.degree(j) != a.degree(i)) record(graded, {i, j});
  }
  rep.checks.push_back(graded);

  for (int n = 3; n <= top + 1; ++n) {
    AxiomCheck c{"stasheff_" + std::to_string(n)};
    for_tuples(d, n, [&](const std::vector<int>& x) {
      RVec sum = zero(d);
      for (int s = 2; s <= n - 1; ++s) {
        for (int r = 0; r + s <= n; ++r) {
          const int t = n - s - r;
          if (r + 1 + t < 2) continue;
          int deg_before = 0;
          for (int k = 0; k < r; ++k) deg_before += a.degree(x[k]);
          const long e = r + static_cast<long>(s) * t + static_cast<long>(2 - s) * deg_before;
          const Rational sign = (e % 2 == 0) ? 1 : -1;
          const RVec inner = a.operation(std::vector<int>(x.begin() + r, x.begin() + r + s));
          if (is_zero(inner)) continue;
          std::vector<RVec> args;
          for (int k = 0; k < r; ++k) args.push_back(unit(d, x[k]));
          args.push_back(inner);
          for (int k = r + s; k < n; ++k) args.push_back(unit(d, x[k]));
          axpy(sum, sign, apply_linear(a, args));
        }
      }
      if (!is_zero(sum)) record(c, x);
    });
    rep.checks.push_back(c);
  }

  for (int n = 2; n <= top; ++n) {
    if (n > 2 && !a.higher.count(n)) continue;
    AxiomCheck c{"involution_sign_" + std::to_string(n)};
    for_tuples(d, n, [&](const std::vector<int>& x) {
      const RVec l = apply_inv(a, a.operation(x));
      std::vector<RVec> args;
      std::vector<int> degs;
      for (int k = n - 1; k >= 0; --k) args.push_back(a.inv[x[k]]);
      for (int k = 0; k < n; ++k) degs.push_back(a.degree(x[k]));
      RVec r = apply_linear(a, args);
      if (involution_sign(degs) < 0) {
        for (auto& v : r) v = -v;
      }
      if (l != r) record(c, x);
    });
    rep.checks.push_back(c);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Examples

namespace {

AlgebraTable empty_table(int d) {
  AlgebraTable t;
  t.dim = d;
  t.mult.assign(d, std::vector<RVec>(d, zero(d)));
  t.form.assign(d, zero(d));
  t.inv.assign(d, zero(d));
  return t;
}

AlgebraTable matrix_algebra(bool transpose) {
  // E_ab with index 2a + b; E_ab E_cd = [b == c] E_ad; trace(E_ab E_cd) = [b == c][a == d].
  AlgebraTable t = empty_table(4);
  t.labels = {"E11", "E12", "E21", "E22"};
  for (int x = 0; x < 4; ++x) {
    const int a = x / 2, b = x % 2;
    for (int y = 0; y < 4; ++y) {
      const int c = y / 2, dd = y % 2;
      if (b == c) {
        t.mult[x][y][2 * a + dd] = 1;
        if (a == dd) t.form[x][y] = 1;
      }
    }
    t.inv[x][transpose ? 2 * b + a : x] = 1;
  }
  return t;
}

}  // namespace

AlgebraTable matrix_algebra_transpose() { return matrix_algebra(true); }
AlgebraTable matrix_algebra_identity_involution() { return matrix_algebra(false); }

AlgebraTable cyclic_group_algebra(int order) {
  AlgebraTable t = empty_table(order);
  for (int g = 0; g < order; ++g) {
    t.labels.push_back("g" + std::to_string(g));
    for (int h = 0; h < order; ++h) {
      t.mult[g][h][(g + h) % order] = 1;
      if ((g + h) % order == 0) t.form[g][h] = 1;
    }
    t.inv[g][(order - g) % order] = 1;
  }
  return t;
}

AlgebraTable exterior_algebra_two_odd() {
  AlgebraTable t = empty_table(4);
  t.labels = {"1", "e1", "e2", "e1e2"};
  t.grading = {0, 1, 1, 2};
  for (int i = 0; i < 4; ++i) {
    t.mult[0][i][i] = 1;
    t.mult[i][0][i] = 1;
  }
  t.mult[1][2][3] = 1;
  t.mult[2][1][3] = -1;
  // Pairing with the top class.
  t.form[0][3] = t.form[3][0] = 1;
  t.form[1][2] = 1;
  t.form[2][1] = -1;
  for (int i = 0; i < 4; ++i) t.inv[i][i] = 1;
  return t;
}

AlgebraTable square_zero_m3(int y_sign) {
  AlgebraTable t = empty_table(2);
  t.labels = {"x", "y"};
  t.grading = {0, -1};
  t.form[0][1] = t.form[1][0] = 1;
  t.inv[0][0] = 1;
  t.inv[1][1] = y_sign;
  std::vector<RVec> m3(8, zero(2));
  m3[0][1] = 1;  // m3(x, x, x) = y
  t.higher[3] = std::move(m3);
  return t;
}

}  // namespace klein
