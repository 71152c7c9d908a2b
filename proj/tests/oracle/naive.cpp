#include "naive.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

using klein::GraphVariant;

namespace {

// Legs on half-edges 0..n-1 (label i+1 on i), edges on (n+2k, n+2k+1).
struct Raw {
  int n = 0;
  int edges = 0;
  std::vector<int> next;
  std::vector<int> color;
  int half_edges() const { return n + 2 * edges; }
  int partner(int h) const { return h < n ? h : (((h - n) ^ 1) + n); }
};

std::vector<int> vertex_ids(const Raw& r, int* count) {
  std::vector<int> v(r.half_edges(), -1);
  int k = 0;
  for (int h = 0; h < r.half_edges(); ++h) {
    if (v[h] >= 0) continue;
    for (int x = h; v[x] < 0; x = r.next[x]) v[x] = k;
    ++k;
  }
  if (count) *count = k;
  return v;
}

Raw from_graph(const klein::HalfEdgeGraph& g) {
  Raw r;
  r.n = g.leg_count();
  r.edges = g.edge_count();
  std::vector<int> to(g.half_edge_count());
  for (int i = 1; i <= r.n; ++i) to[g.leg_half_edge(i)] = i - 1;
  int k = r.n;
  for (int h : g.edges()) {
    to[h] = k++;
    to[g.pairing(h)] = k++;
  }
  r.next.assign(g.half_edge_count(), 0);
  r.color.assign(g.half_edge_count(), 0);
  for (int h = 0; h < g.half_edge_count(); ++h) {
    r.next[to[h]] = to[g.next(h)];
    r.color[to[h]] = g.color(h);
  }
  return r;
}

// Every equivalent labelled structure is produced by: reflecting (moebius)
// or reversing (dianalytic) a set of vertices, permuting edges, swapping the
// ends of edges; then edge colours are normalised to (0, twist).
template <class F>
void for_each_image(const Raw& r, GraphVariant variant, F&& f) {
  int nv = 0;
  const auto vid = vertex_ids(r, &nv);
  const int H = r.half_edges();
  const bool flips = variant != GraphVariant::ribbon;
  const int masks = flips ? 1 << nv : 1;
  std::vector<int> perm(r.edges);
  for (int s = 0; s < masks; ++s) {
    Raw a = r;
    for (int h = 0; h < H; ++h) {
      if (!((s >> vid[h]) & 1)) continue;
      a.next[r.next[h]] = h;
      if (variant == GraphVariant::moebius) a.color[h] ^= 1;
    }
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int swap = 0; swap < (1 << r.edges); ++swap) {
        std::vector<int> to(H);
        for (int i = 0; i < r.n; ++i) to[i] = i;
        for (int e = 0; e < r.edges; ++e) {
          const int lo = r.n + 2 * perm[e], hi = lo + 1;
          const bool sw = (swap >> e) & 1;
          to[r.n + 2 * e] = sw ? hi : lo;
          to[r.n + 2 * e + 1] = sw ? lo : hi;
        }
        Raw b = a;
        for (int h = 0; h < H; ++h) {
          b.next[to[h]] = to[a.next[h]];
          b.color[to[h]] = variant == GraphVariant::moebius ? a.color[h] : 0;
        }
        for (int e = 0; e < r.edges; ++e) {
          const int lo = r.n + 2 * e;
          b.color[lo + 1] ^= b.color[lo];
          b.color[lo] = 0;
        }
        f(b);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

std::string serial(const Raw& r) {
  std::string s;
  for (int x : r.next) s += static_cast<char>('A' + x);
  s += '|';
  for (int c : r.color) s += static_cast<char>('0' + c);
  return s;
}

std::string canonical(const Raw& r, GraphVariant variant) {
  std::string best;
  for_each_image(r, variant, [&](const Raw& b) {
    std::string s = serial(b);
    if (best.empty() || s < best) best = std::move(s);
  });
  return best;
}

bool connected(const Raw& r) {
  const int H = r.half_edges();
  std::vector<int> seen(H, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int h = stack.back();
    stack.pop_back();
    for (int x : {r.next[h], r.partner(h)}) {
      if (!seen[x]) {
        seen[x] = 1;
        ++count;
        stack.push_back(x);
      }
    }
  }
  return count == H;
}

}  // namespace

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::map<int, std::size_t> naive_counts(int genus, int legs, GraphVariant variant) {
  std::map<int, std::size_t> out;
  for (int e = 0; e <= 3 * genus - 3 + legs; ++e) {
    const int v = e - genus + 1;
    const int H = 2 * e + legs;
    if (v < 1 || H < 3 * v) continue;
    std::set<std::string> classes;
    std::vector<int> p(H);
    std::iota(p.begin(), p.end(), 0);
    do {
      Raw r;
      r.n = legs;
      r.edges = e;
      r.next = p;
      int nv = 0;
      std::vector<int> len(H, 0);
      const auto vid = vertex_ids(r, &nv);
      if (nv != v) continue;
      for (int h = 0; h < H; ++h) ++len[vid[h]];
      if (std::any_of(len.begin(), len.begin() + nv, [](int l) { return l < 3; }) || !connected(r)) continue;
      const int color_bits = variant == GraphVariant::moebius ? e + legs : 0;
      for (int c = 0; c < (1 << color_bits); ++c) {
        r.color.assign(H, 0);
        for (int i = 0; i < legs; ++i) r.color[i] = (c >> i) & 1;
        for (int k = 0; k < e; ++k) r.color[legs + 2 * k + 1] = (c >> (legs + k)) & 1;
        classes.insert(canonical(r, variant));
      }
    } while (std::next_permutation(p.begin(), p.end()));
    if (!classes.empty()) out[e] = classes.size();
  }
  return out;
}

std::string naive_canonical(const klein::HalfEdgeGraph& g, GraphVariant variant) {
  return canonical(from_graph(g), variant);
}

std::size_t naive_automorphism_count(const klein::HalfEdgeGraph& g, GraphVariant variant) {
  Raw r = from_graph(g);
  for (int e = 0; e < r.edges; ++e) {
    r.color[r.n + 2 * e + 1] ^= r.color[r.n + 2 * e];
    r.color[r.n + 2 * e] = 0;
  }
  if (variant != GraphVariant::moebius) std::fill(r.color.begin(), r.color.end(), 0);
  const std::string self = serial(r);
  std::size_t count = 0;
  for_each_image(r, variant, [&](const Raw& b) { count += serial(b) == self; });
  return count;
}

std::tuple<int, int, int> naive_surface(const klein::HalfEdgeGraph& g) {
  const Raw r = from_graph(g);
  const int H = r.half_edges();
  int nv = 0;
  const auto vid = vertex_ids(r, &nv);
  std::vector<int> prev(H);
  for (int h = 0; h < H; ++h) prev[r.next[h]] = h;

  // Corner h sits between h and next(h).
  std::vector<int> parent(H);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int h = 0; h < H; ++h) {
    const int p = r.partner(h);
    if (p == h) {
      join(h, prev[h]);
    } else if (h < p) {
      if (r.color[h] ^ r.color[p]) {
        join(h, p);
        join(prev[h], prev[p]);
      } else {
        join(h, prev[p]);
        join(prev[h], p);
      }
    }
  }
  std::set<int> roots;
  for (int h = 0; h < H; ++h) roots.insert(find(h));
  const int boundaries = static_cast<int>(roots.size());

  // Orientable iff vertex flips can untwist every edge.
  std::vector<int> side(nv, -1);
  bool orientable = true;
  side[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int h = 0; h < H; ++h) {
      const int p = r.partner(h);
      if (p == h || side[vid[h]] < 0) continue;
      const int want = side[vid[h]] ^ r.color[h] ^ r.color[p];
      if (side[vid[p]] < 0) {
        side[vid[p]] = want;
        changed = true;
      } else if (side[vid[p]] != want) {
        orientable = false;
      }
    }
  }
  const int chi = nv - r.edges;
  const int k = 2 - boundaries - chi;
  if (orientable) return {k / 2, 0, boundaries};
  const int u = k % 2 ? 1 : 2;
  return {(k - u) / 2, u, boundaries};
}

klein::MobiusCorolla word_compose(const klein::MobiusCorolla& x, int i, const klein::MobiusCorolla& y) {
  const int n = x.arity(), m = y.arity();
  std::vector<std::pair<int, int>> word;
  for (int l : y.order) word.push_back({l + i - 1, y.colors[l]});
  if (x.colors[i]) {
    std::reverse(word.begin(), word.end());
    for (auto& w : word) w.second ^= 1;
  }
  std::vector<int> order;
  std::vector<std::uint8_t> colors(n + m, 0);
  colors[0] = x.colors[0];
  for (int l : x.order) {
    if (l == i) {
      for (auto [label, c] : word) {
        order.push_back(label);
        colors[label] = static_cast<std::uint8_t>(c);
      }
    } else {
      const int nl = l < i ? l : l + m - 1;
      order.push_back(nl);
      colors[nl] = x.colors[l];
    }
  }
  return klein::MobiusCorolla::make(order, colors);
}

}  // namespace oracle
