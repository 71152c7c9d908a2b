#include "klein/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <gmpxx.h>

namespace klein {

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t;
  t.rows = cols;
  t.cols = rows;
  t.entries.reserve(entries.size());
  for (const auto& e : entries) t.entries.push_back({e.col, e.row, e.value});
  t.normalize();
  return t;
}

void SparseIntMatrix::normalize() {
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  std::vector<MatrixEntry> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols) throw std::out_of_range("matrix entry out of range");
    if (!out.empty() && out.back().row == e.row && out.back().col == e.col) {
      out.back().value += e.value;
    } else {
      out.push_back(e);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const MatrixEntry& e) { return e.value == 0; }), out.end());
  entries = std::move(out);
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shapes do not compose");
  std::vector<std::vector<std::pair<int, long long>>> orow(o.rows);
  for (const auto& e : o.entries) orow[e.row].push_back({e.col, e.value});
  SparseIntMatrix p;
  p.rows = rows;
  p.cols = o.cols;
  for (const auto& e : entries) {
    for (const auto& [c, v] : orow[e.col]) {
      long long prod;
      if (__builtin_mul_overflow(e.value, v, &prod)) throw std::overflow_error("matrix product overflow");
      p.entries.push_back({e.row, c, prod});
    }
  }
  p.normalize();
  return p;
}

namespace {

struct Overflow {};

// Row arithmetic policies. combine(x, y, a, b) returns a*x - b*y.
struct Int64Ops {
  using T = long long;
  static T from(long long v) { return v; }
  static bool zero(const T& v) { return v == 0; }
  static T combine(T x, T y, T a, T b) {
    T p, q, r;
    if (__builtin_mul_overflow(a, x, &p) || __builtin_mul_overflow(b, y, &q) || __builtin_sub_overflow(p, q, &r)) {
      throw Overflow{};
    }
    return r;
  }
  static void tidy(std::vector<std::pair<int, T>>& row) {
    T g = 0;
    for (const auto& [c, v] : row) g = std::gcd(g, v < 0 ? -v : v);
    if (g > 1) {
      for (auto& [c, v] : row) v /= g;
    }
  }
  static T scale_pivot(const T& piv, const T& a, T& fa) {
    const T g = std::gcd(piv < 0 ? -piv : piv, a < 0 ? -a : a);
    fa = a / g;
    return piv / g;
  }
};

struct MpzOps {
  using T = mpz_class;
  static T from(long long v) { return mpz_class(static_cast<long>(v)); }
  static bool zero(const T& v) { return sgn(v) == 0; }
  static T combine(const T& x, const T& y, const T& a, const T& b) { return a * x - b * y; }
  static void tidy(std::vector<std::pair<int, T>>& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) return;
    }
    if (g > 1) {
      for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }
  static T scale_pivot(const T& piv, const T& a, T& fa) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), piv.get_mpz_t(), a.get_mpz_t());
    fa = a / g;
    return piv / g;
  }
};

struct ModOps {
  using T = std::uint32_t;
  std::uint32_t p;
  T from(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<T>(r < 0 ? r + p : r);
  }
  static bool zero(const T& v) { return v == 0; }
  T mul(T a, T b) const { return static_cast<T>(static_cast<std::uint64_t>(a) * b % p); }
  T inv(T a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<T>(r);
  }
  // Rows are kept monic at the pivot, so x - (a/piv) y.
  T combine(T x, T y, T piv, T a) const {
    const T f = mul(a, inv(piv));
    return static_cast<T>((x + p - mul(f, y)) % p);
  }
  static void tidy(std::vector<std::pair<int, T>>&) {}
  static T scale_pivot(const T& piv, const T& a, T& fa) {
    fa = a;
    return piv;
  }
};

template <typename Ops>
using Row = std::vector<std::pair<int, typename Ops::T>>;

// Structured elimination with a smallest-row-first pivot order and a
// least-populated-column pivot inside that row.
template <typename Ops>
std::size_t eliminate(std::vector<Row<Ops>> rows, int cols, const Ops& ops) {
  using T = typename Ops::T;
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<int>> col_rows(cols);
  for (int r = 0; r < n; ++r) {
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  }
  std::set<std::pair<std::size_t, int>> queue;
  std::vector<char> alive(n, 1);
  for (int r = 0; r < n; ++r) queue.insert({rows[r].size(), r});
  auto has = [&](int r, int c) -> const T* {
    const auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  };
  std::size_t rank = 0;
  while (!queue.empty()) {
    const auto [sz, r] = *queue.begin();
    queue.erase(queue.begin());
    alive[r] = 0;
    if (sz == 0) continue;
    int pc = rows[r].front().first;
    std::size_t best = SIZE_MAX;
    for (const auto& [c, v] : rows[r]) {
      if (col_rows[c].size() < best) {
        best = col_rows[c].size();
        pc = c;
      }
    }
    ++rank;
    const T piv = *has(r, pc);
    std::vector<int> targets;
    for (int i : col_rows[pc]) {
      if (alive[i] && i != r && has(i, pc)) targets.push_back(i);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int i : targets) {
      const T a = *has(i, pc);
      T fa;
      const T fp = Ops::scale_pivot(piv, a, fa);
      queue.erase({rows[i].size(), i});
      Row<Ops> merged;
      merged.reserve(rows[i].size() + rows[r].size());
      const auto& x = rows[i];
      const auto& y = rows[r];
      std::size_t p = 0, q = 0;
      const T zero_v = ops.from(0);
      while (p < x.size() || q < y.size()) {
        int c;
        T v;
        if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
          c = x[p].first;
          if constexpr (std::is_same_v<Ops, ModOps>) {
            v = x[p].second;
          } else {
            v = ops.combine(x[p].second, zero_v, fp, fa);
          }
          ++p;
        } else if (p == x.size() || y[q].first < x[p].first) {
          c = y[q].first;
          if constexpr (std::is_same_v<Ops, ModOps>) {
            v = ops.combine(zero_v, y[q].second, piv, a);
          } else {
            v = ops.combine(zero_v, y[q].second, fp, fa);
          }
          col_rows[c].push_back(i);
          ++q;
        } else {
          c = x[p].first;
          if constexpr (std::is_same_v<Ops, ModOps>) {
            v = ops.combine(x[p].second, y[q].second, piv, a);
          } else {
            v = ops.combine(x[p].second, y[q].second, fp, fa);
          }
          ++p;
          ++q;
        }
        if (!Ops::zero(v)) merged.emplace_back(c, std::move(v));
      }
      Ops::tidy(merged);
      rows[i] = std::move(merged);
      queue.insert({rows[i].size(), i});
    }
    Row<Ops>().swap(rows[r]);
  }
  return rank;
}

struct Component {
  std::vector<int> rows;
  std::vector<int> cols;
};

std::vector<Component> components(const SparseIntMatrix& m) {
  std::vector<int> parent(m.rows + m.cols);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : m.entries) {
    const int a = find(e.row), b = find(m.rows + e.col);
    if (a != b) parent[a] = b;
  }
  std::vector<int> id(m.rows + m.cols, -1);
  std::vector<Component> out;
  std::vector<char> used(m.rows + m.cols, 0);
  for (const auto& e : m.entries) used[e.row] = used[m.rows + e.col] = 1;
  for (int x = 0; x < m.rows + m.cols; ++x) {
    if (!used[x]) continue;
    const int root = find(x);
    if (id[root] < 0) {
      id[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    if (x < m.rows) {
      out[id[root]].rows.push_back(x);
    } else {
      out[id[root]].cols.push_back(x - m.rows);
    }
  }
  return out;
}

template <typename Ops>
std::size_t rank_by_components(const SparseIntMatrix& m, const Ops& ops) {
  SparseIntMatrix s = m;
  s.normalize();
  std::size_t total = 0;
  std::vector<int> row_local(m.rows), col_local(m.cols);
  std::vector<std::vector<const MatrixEntry*>> by_row(m.rows);
  for (const auto& e : s.entries) by_row[e.row].push_back(&e);
  for (const auto& comp : components(s)) {
    for (std::size_t i = 0; i < comp.rows.size(); ++i) row_local[comp.rows[i]] = static_cast<int>(i);
    for (std::size_t j = 0; j < comp.cols.size(); ++j) col_local[comp.cols[j]] = static_cast<int>(j);
    auto build = [&](auto ops_local) {
      using L = decltype(ops_local);
      std::vector<Row<L>> rows(comp.rows.size());
      for (int r : comp.rows) {
        auto& row = rows[row_local[r]];
        for (const MatrixEntry* e : by_row[r]) {
          auto v = ops_local.from(e->value);
          if (!L::zero(v)) row.emplace_back(col_local[e->col], v);
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      }
      return eliminate<L>(std::move(rows), static_cast<int>(comp.cols.size()), ops_local);
    };
    if constexpr (std::is_same_v<Ops, Int64Ops>) {
      try {
        total += build(Int64Ops{});
      } catch (const Overflow&) {
        total += build(MpzOps{});
      }
    } else {
      total += build(ops);
    }
  }
  return total;
}

}  // namespace

std::size_t rank(const SparseIntMatrix& m) { return rank_by_components(m, Int64Ops{}); }

std::size_t rank_bigint(const SparseIntMatrix& m) { return rank_by_components(m, MpzOps{}); }

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) { return rank_by_components(m, ModOps{p}); }

std::size_t dense_rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
  const ModOps ops{p};
  std::vector<std::vector<std::uint32_t>> a(m.rows, std::vector<std::uint32_t>(m.cols, 0));
  for (const auto& e : m.entries) a[e.row][e.col] = static_cast<std::uint32_t>((a[e.row][e.col] + ops.from(e.value)) % p);
  std::size_t rank = 0;
  for (int c = 0; c < m.cols && rank < static_cast<std::size_t>(m.rows); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::uint32_t inv = ops.inv(a[rank][c]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::uint32_t f = ops.mul(a[r][c], inv);
      for (int k = c; k < m.cols; ++k) {
        a[r][k] = static_cast<std::uint32_t>((a[r][k] + p - ops.mul(f, a[rank][k])) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace klein
