#include "klein/orientation.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>
#include <numeric>
#include <string>
#include <algorithm>

namespace klein {

int permutation_sign(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

long long small_determinant(std::vector<std::vector<long long>> m) {
  // Bareiss; exact as long as the minors fit, which they do for the
  // unimodular change-of-basis matrices used here.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = static_cast<long long>(v / prev);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Orientation reference_orientation(const HalfEdgeGraph& g) {
  Orientation o;
  const int h_count = g.half_edge_count();
  std::vector<int> pos(h_count, -1);
  for (int h = 0; h < h_count; ++h) {
    const int p = g.pairing(h);
    if (p > h) {
      pos[h] = pos[p] = static_cast<int>(o.edges.size());
      o.edges.push_back(h);
    }
  }
  const int e_count = static_cast<int>(o.edges.size());
  const int v_count = g.vertex_count();

  // Breadth-first tree; up[v] is the half-edge at v leading to its parent.
  std::vector<std::vector<int>> at(v_count);
  for (int h = 0; h < h_count; ++h) at[g.vertex_of(h)].push_back(h);
  std::vector<int> up(v_count, -2);
  std::vector<char> tree(e_count, 0);
  const int root = g.vertex_of(0);
  up[root] = -1;
  std::vector<int> queue{root};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (int h : at[queue[qi]]) {
      if (g.is_leg(h)) continue;
      const int w = g.vertex_of(g.pairing(h));
      if (up[w] != -2) continue;
      up[w] = g.pairing(h);
      tree[pos[h]] = 1;
      queue.push_back(w);
    }
  }

  // Signed path from v up to the root.
  auto add_path = [&](std::vector<int>& c, int v, int coef) {
    while (up[v] >= 0) {
      const int a = up[v];
      const int e = pos[a];
      c[e] += coef * (o.edges[e] == a ? 1 : -1);
      v = g.vertex_of(g.pairing(a));
    }
  };
  for (int e = 0; e < e_count; ++e) {
    if (tree[e]) continue;
    const int h = o.edges[e];
    std::vector<int> c(e_count, 0);
    c[e] = 1;
    // h runs from u to w; close up with w -> root -> u.
    add_path(c, g.vertex_of(g.pairing(h)), 1);
    add_path(c, g.vertex_of(h), -1);
    o.cycles.push_back(std::move(c));
    o.nontree.push_back(e);
  }
  return o;
}

int transport_sign(const HalfEdgeGraph& source, const Orientation& source_or, const std::vector<int>& f,
                   const HalfEdgeGraph& target, const Orientation& target_ref) {
  const int th = target.half_edge_count();
  std::vector<int> tpos(th, -1), tdir(th, 0);
  for (std::size_t i = 0; i < target_ref.edges.size(); ++i) {
    const int h = target_ref.edges[i];
    tpos[h] = tpos[target.pairing(h)] = static_cast<int>(i);
    tdir[h] = 1;
    tdir[target.pairing(h)] = -1;
  }
  const std::size_t e_count = source_or.edges.size();
  if (e_count != target_ref.edges.size() || source_or.cycles.size() != target_ref.cycles.size()) {
    throw std::logic_error("transport between graphs of different shape");
  }
  std::vector<int> pi(e_count), dir(e_count);
  for (std::size_t i = 0; i < e_count; ++i) {
    const int img = f[source_or.edges[i]];
    pi[i] = tpos[img];
    dir[i] = tdir[img];
    if (pi[i] < 0) throw std::logic_error("transport map does not send edges to edges");
  }
  std::vector<int> row_of(e_count, -1);
  for (std::size_t k = 0; k < target_ref.nontree.size(); ++k) row_of[target_ref.nontree[k]] = static_cast<int>(k);
  const std::size_t b = source_or.cycles.size();
  std::vector<std::vector<long long>> m(b, std::vector<long long>(b, 0));
  for (std::size_t j = 0; j < b; ++j) {
    for (std::size_t i = 0; i < e_count; ++i) {
      const int c = source_or.cycles[j][i];
      if (c == 0) continue;
      const int k = row_of[pi[i]];
      if (k >= 0) m[k][j] += static_cast<long long>(c) * dir[i];
    }
  }
  // Coordinates of the target's own cycles; identity for a plain reference.
  std::vector<std::vector<long long>> t(b, std::vector<long long>(b, 0));
  for (std::size_t j = 0; j < b; ++j) {
    for (std::size_t k = 0; k < b; ++k) t[k][j] = target_ref.cycles[j][target_ref.nontree[k]];
  }
  const long long det = small_determinant(std::move(m)) * small_determinant(std::move(t));
  if (det != 1 && det != -1) {
    throw std::logic_error("homology transport has determinant " + std::to_string(det));
  }
  (void)source;
  return permutation_sign(pi) * static_cast<int>(det);
}

Orientation perturbed_orientation(const Orientation& o, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t e_count = o.edges.size();
  std::vector<int> perm(e_count);  // new position -> old position
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> where(e_count);
  for (std::size_t i = 0; i < e_count; ++i) where[perm[i]] = static_cast<int>(i);
  Orientation r;
  for (std::size_t i = 0; i < e_count; ++i) r.edges.push_back(o.edges[perm[i]]);
  for (int k : o.nontree) r.nontree.push_back(where[k]);
  for (const auto& c : o.cycles) {
    std::vector<int> z(e_count);
    for (std::size_t i = 0; i < e_count; ++i) z[i] = c[perm[i]];
    r.cycles.push_back(std::move(z));
  }
  // Random elementary operations: add +-1 times one cycle to another, negate,
  // swap.
  const std::size_t b = r.cycles.size();
  for (int step = 0; b > 0 && step < 4 * static_cast<int>(b); ++step) {
    const std::size_t i = rng() % b, j = rng() % b;
    switch (rng() % 3) {
      case 0:
        if (i != j) {
          const int f = rng() % 2 ? 1 : -1;
          for (std::size_t x = 0; x < e_count; ++x) r.cycles[i][x] += f * r.cycles[j][x];
        }
        break;
      case 1:
        for (auto& v : r.cycles[i]) v = -v;
        break;
      default:
        std::swap(r.cycles[i], r.cycles[j]);
    }
  }
  return r;
}

InducedOrientation induced_orientation(const Orientation& o, int edge_half, const std::vector<int>& half_edge_map,
                                       const HalfEdgeGraph& g) {
  InducedOrientation r;
  int drop = -1;
  for (std::size_t i = 0; i < o.edges.size(); ++i) {
    if (o.edges[i] == edge_half || o.edges[i] == g.pairing(edge_half)) drop = static_cast<int>(i);
  }
  if (drop < 0) throw std::logic_error("edge not in orientation");
  r.sign = drop % 2 ? -1 : 1;
  for (std::size_t i = 0; i < o.edges.size(); ++i) {
    if (static_cast<int>(i) != drop) r.orientation.edges.push_back(half_edge_map[o.edges[i]]);
  }
  for (const auto& c : o.cycles) {
    std::vector<int> z;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (static_cast<int>(i) != drop) z.push_back(c[i]);
    }
    r.orientation.cycles.push_back(std::move(z));
  }
  return r;
}

}  // namespace klein
