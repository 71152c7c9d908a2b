#include "klein/operad.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

#include "klein/enumerate.hpp"

namespace klein {

MobiusCorolla MobiusCorolla::make(std::vector<int> order, std::vector<std::uint8_t> colors) {
  const int n = static_cast<int>(order.size());
  if (static_cast<int>(colors.size()) != n + 1) {
    throw std::invalid_argument("corolla needs one colour per input plus the output");
  }
  std::vector<int> seen(n + 1, 0);
  for (int l : order) {
    if (l < 1 || l > n || seen[l]++) throw std::invalid_argument("corolla order is not a permutation");
  }
  if (colors[0]) {
    std::reverse(order.begin(), order.end());
    for (auto& c : colors) c ^= 1;
  }
  return {std::move(order), std::move(colors)};
}

HalfEdgeGraph MobiusCorolla::graph() const {
  const int n = arity();
  std::vector<WordLetter> w;
  w.push_back({n + 1, colors[0]});
  for (int l : order) w.push_back({l, colors[l]});
  return one_vertex_graph(w);
}

MobiusCorolla MobiusCorolla::from_graph(const HalfEdgeGraph& g) {
  if (g.vertex_count() != 1 || g.edge_count() != 0) throw NotOneVertex("a corolla has one vertex and no edges");
  const int n = g.leg_count() - 1;
  const auto w = rotation_word(g, g.leg_half_edge(n + 1));
  std::vector<int> order;
  std::vector<std::uint8_t> colors(n + 1);
  colors[0] = w[0].color;
  for (std::size_t k = 1; k < w.size(); ++k) {
    order.push_back(w[k].symbol);
    colors[w[k].symbol] = w[k].color;
  }
  return make(std::move(order), std::move(colors));
}

std::string MobiusCorolla::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(order[k]);
    if (colors[order[k]]) s += '\'';
  }
  return s + ")";
}

std::vector<MobiusCorolla> mass_basis(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<MobiusCorolla> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<std::uint8_t> c(n + 1, 0);
      for (int j = 1; j <= n; ++j) c[j] = (mask >> (j - 1)) & 1;
      out.push_back(MobiusCorolla::make(perm, c));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

MobiusCorolla mass_planar(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  return MobiusCorolla::make(order, std::vector<std::uint8_t>(n + 1, 0));
}

MobiusCorolla mass_involution() { return MobiusCorolla::make({1}, {0, 1}); }

MobiusCorolla compose_single(const MobiusCorolla& x, int i, const MobiusCorolla& y) {
  const int n = x.arity(), m = y.arity();
  if (i < 1 || i > n) {
    throw PositionOutOfRange("input " + std::to_string(i) + " of a corolla with " + std::to_string(n) + " inputs");
  }
  // Two vertices: x's half-edges 0..n, y's n+1..n+m+1, each read from the output.
  const HalfEdgeGraph gx = x.graph(), gy = y.graph();
  const int hx = gx.half_edge_count();
  GraphData d;
  const int total = hx + gy.half_edge_count();
  d.pairing.resize(total);
  d.vertex.resize(total);
  d.next.resize(total);
  d.color.resize(total);
  for (int h = 0; h < hx; ++h) {
    d.pairing[h] = h;
    d.vertex[h] = 0;
    d.next[h] = gx.next(h);
    d.color[h] = gx.color(h);
  }
  for (int h = 0; h < gy.half_edge_count(); ++h) {
    d.pairing[hx + h] = hx + h;
    d.vertex[hx + h] = 1;
    d.next[hx + h] = hx + gy.next(h);
    d.color[hx + h] = gy.color(h);
  }
  const int hi = gx.leg_half_edge(i);
  const int ho = hx + gy.leg_half_edge(m + 1);
  d.pairing[hi] = ho;
  d.pairing[ho] = hi;
  d.legs.assign(n + m, -1);
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    d.legs[(j < i ? j : j + m - 1) - 1] = gx.leg_half_edge(j);
  }
  d.legs[n + m - 1] = gx.leg_half_edge(n + 1);
  for (int j = 1; j <= m; ++j) d.legs[i + j - 2] = hx + gy.leg_half_edge(j);
  d.vertex_genus = {0, 0};
  const auto c = contract_edge(HalfEdgeGraph::validate(std::move(d)), hi);
  return MobiusCorolla::from_graph(c.graph);
}

MassSum compose_mass(const MobiusCorolla& x, int i, const MobiusCorolla& y) {
  return {{compose_single(x, i, y), 1}};
}

MobiusCorolla relabel_inputs(const MobiusCorolla& x, const std::vector<int>& perm) {
  const int n = x.arity();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabelling has the wrong size");
  std::vector<int> order;
  std::vector<std::uint8_t> colors(n + 1);
  colors[0] = x.colors[0];
  for (int l : x.order) order.push_back(perm[l - 1]);
  for (int j = 1; j <= n; ++j) colors[perm[j - 1]] = x.colors[j];
  return MobiusCorolla::make(std::move(order), std::move(colors));
}

// ---------------------------------------------------------------------------
// Closure classes

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

int ClosureReport::class_index(const HalfEdgeGraph& g) const {
  auto it = class_of.find(canonical_code(g, variant));
  return it == class_of.end() ? -1 : it->second;
}

ClosureReport closure_classes(int genus, int legs, GraphVariant variant, int edge_bound) {
  if (variant == GraphVariant::dianalytic) {
    throw std::invalid_argument("band surfaces are not defined on dianalytic graphs");
  }
  EnumerationQuery q{genus, legs, variant, std::nullopt};
  const GraphFamily f = enumerate_graphs(q);
  ClosureReport r;
  r.genus = genus;
  r.legs = legs;
  r.variant = variant;
  r.edge_bound = edge_bound > 0 ? std::min(edge_bound, f.max_edges_found()) : f.max_edges_found();
  const int levels = std::max(0, r.edge_bound - f.min_edges + 1);

  std::vector<std::size_t> offset(levels + 1, 0);
  for (int i = 0; i < levels; ++i) offset[i + 1] = offset[i] + f.levels[i].size();
  r.graphs = offset[levels];
  UnionFind uf(r.graphs);
  std::vector<SurfaceType> surf(r.graphs);
  for (int i = 0; i < levels; ++i) {
    const int e = f.min_edges + i;
    for (std::size_t k = 0; k < f.levels[i].size(); ++k) {
      const HalfEdgeGraph g = decode(f.levels[i][k]);
      surf[offset[i] + k] = surface_type(g, variant);
      if (i == 0) continue;
      for (int h : g.edges()) {
        if (g.is_loop(h)) continue;
        const auto c = contract_edge(g, h);
        const long j = f.index_of(e - 1, canonical_code(c.graph, variant));
        if (j < 0) throw std::logic_error("contraction left the enumerated family");
        if (uf.unite(static_cast<int>(offset[i] + k), static_cast<int>(offset[i - 1] + j))) ++r.merges;
      }
    }
  }

  std::map<int, int> root_to_class;
  std::set<SurfaceType> invariants;
  for (int i = 0; i < levels; ++i) {
    for (std::size_t k = 0; k < f.levels[i].size(); ++k) {
      const int x = static_cast<int>(offset[i] + k);
      const int root = uf.find(x);
      auto [it, fresh] = root_to_class.try_emplace(root, static_cast<int>(r.classes.size()));
      if (fresh) r.classes.push_back({f.levels[i][k], surf[x], 0});
      ClosureClass& cls = r.classes[it->second];
      ++cls.members;
      if (!(cls.surface == surf[x])) r.invariant_violation = true;
      r.class_of.emplace(f.levels[i][k], it->second);
      invariants.insert(surf[x]);
    }
  }
  r.distinct_invariants = invariants.size();
  r.exact = !r.invariant_violation && r.classes.size() == r.distinct_invariants;
  return r;
}

// ---------------------------------------------------------------------------
// Normal form

std::vector<HalfEdgeGraph> slide_moves(const HalfEdgeGraph& g) {
  if (g.vertex_count() != 1) throw NotOneVertex("slide moves act on one-vertex graphs");
  const int d = g.valence(0);
  const auto cyc = g.rotation_at(0);
  std::vector<HalfEdgeGraph> out;
  for (int first : cyc) {
    for (int len = 2; len <= d - 2; ++len) {
      const HalfEdgeGraph x = expand_vertex(g, first, len);
      for (int h = 0; h < g.half_edge_count(); ++h) {
        if (x.is_leg(h) || x.vertex_of(h) != 0 || x.vertex_of(x.pairing(h)) != 1) continue;
        out.push_back(contract_edge(x, h).graph);
      }
    }
  }
  return out;
}

namespace {

// (surplus twisted loops, interior sizes, blocks apart); zero means normal.
std::tuple<int, int, int> shape_potential(const HalfEdgeGraph& g) {
  const auto cyc = g.rotation_at(0);
  const int d = static_cast<int>(cyc.size());
  std::vector<int> pos(g.half_edge_count());
  for (int i = 0; i < d; ++i) pos[cyc[i]] = i;
  int twisted = 0, interior = 0;
  std::vector<int> marks;
  for (int h : g.edges()) {
    if (!g.twist(h)) continue;
    ++twisted;
    const int a = std::min(pos[h], pos[g.pairing(h)]), b = std::max(pos[h], pos[g.pairing(h)]);
    interior += std::min(b - a - 1, d - (b - a) - 1);
    marks.push_back(a);
    marks.push_back(b);
  }
  int apart = 0;
  if (twisted == 2 && interior == 0) {
    std::vector<char> in(d, 0);
    for (int p : marks) in[p] = 1;
    bool contiguous = false;
    for (int s = 0; s < d && !contiguous; ++s) {
      contiguous = in[s] && in[(s + 1) % d] && in[(s + 2) % d] && in[(s + 3) % d];
    }
    apart = contiguous ? 0 : 1;
  }
  return {twisted > 2 ? twisted : 0, interior, apart};
}

}  // namespace

bool is_normal_shape(const HalfEdgeGraph& g) {
  if (g.vertex_count() != 1) return false;
  return shape_potential(g) == std::tuple<int, int, int>{0, 0, 0};
}

NormalForm normal_form(const HalfEdgeGraph& g, std::size_t state_limit) {
  if (g.vertex_count() != 1) throw NotOneVertex("normal form needs a one-vertex graph");
  NormalForm nf;
  nf.trace.push_back(g);
  HalfEdgeGraph cur = g;
  auto pot = shape_potential(cur);
  while (pot != std::tuple<int, int, int>{0, 0, 0}) {
    std::vector<HalfEdgeGraph> states{cur};
    std::vector<int> parent{-1};
    std::unordered_map<CanonicalCode, int, CanonicalCodeHash> seen;
    seen.emplace(canonical_code(cur, GraphVariant::moebius), 0);
    int found = -1;
    for (std::size_t head = 0; head < states.size() && found < 0; ++head) {
      for (auto& nxt : slide_moves(states[head])) {
        const auto code = canonical_code(nxt, GraphVariant::moebius);
        if (!seen.emplace(code, static_cast<int>(states.size())).second) continue;
        const bool better = shape_potential(nxt) < pot;
        states.push_back(std::move(nxt));
        parent.push_back(static_cast<int>(head));
        if (better) {
          found = static_cast<int>(states.size()) - 1;
          break;
        }
      }
      if (states.size() > state_limit) throw std::runtime_error("normal form search exceeded its state limit");
    }
    if (found < 0) throw std::logic_error("no slide sequence improves the shape");
    std::vector<int> path;
    for (int s = found; s > 0; s = parent[s]) path.push_back(s);
    for (auto it = path.rbegin(); it != path.rend(); ++it) nf.trace.push_back(states[*it]);
    cur = states[found];
    pot = shape_potential(cur);
  }
  nf.graph = decode(canonical_code(cur, GraphVariant::moebius));
  return nf;
}

// ---------------------------------------------------------------------------
// Koszulness

KoszulReport koszul_check(int n, const ComplexOptions& opt) {
  if (n < 2) throw std::invalid_argument("koszul_check needs n >= 2");
  KoszulReport r;
  r.n = n;
  GradedComplex ca = build_cobar_complex(n, CobarOperad::Ass, opt);
  GradedComplex cm = build_cobar_complex(n, CobarOperad::MAss, opt);
  r.d_squared = verify_d_squared(ca) && verify_d_squared(cm);
  const int top = n - 2;
  for (int s = 0; s <= top; ++s) {
    r.dims_ass.push_back(ca.dim(s));
    r.dims_mass.push_back(cm.dim(s));
  }
  r.dims_split = true;
  for (int s = 0; s <= top; ++s) r.dims_split = r.dims_split && r.dims_mass[s] == (std::size_t{1} << n) * r.dims_ass[s];
  if (!r.d_squared) return r;
  const auto ba = betti_numbers(ca), bm = betti_numbers(cm);
  r.concentrated = true;
  for (int s = 0; s <= top; ++s) {
    const auto ia = ba.find(s), im = bm.find(s);
    r.betti_ass.push_back(ia == ba.end() ? 0 : ia->second);
    r.betti_mass.push_back(im == bm.end() ? 0 : im->second);
    if (s < top) r.concentrated = r.concentrated && r.betti_ass[s] == 0 && r.betti_mass[s] == 0;
  }
  std::size_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  r.top_dims = r.betti_ass[top] == fact && r.betti_mass[top] == (std::size_t{1} << n) * fact;
  return r;
}

}  // namespace klein
