#include "klein/verify.hpp"

#include <chrono>
#include <set>

#include "klein/linalg.hpp"

namespace klein {

std::string ComplexCase::label() const {
  if (cobar) return std::string("cobar ") + (operad == CobarOperad::Ass ? "Ass" : "MAss") + "(" + std::to_string(n) + ")";
  return std::string(to_string(variant)) + " (" + std::to_string(genus) + "," + std::to_string(legs) + ")";
}

std::vector<ComplexCase> standard_cases(int max_genus, int max_legs, int max_cobar) {
  std::vector<ComplexCase> out;
  for (GraphVariant v : {GraphVariant::ribbon, GraphVariant::moebius, GraphVariant::dianalytic}) {
    for (int g = 0; g <= max_genus; ++g) {
      for (int n = 0; n <= max_legs; ++n) {
        if (2 * g + n <= 2) continue;
        ComplexCase c;
        c.variant = v;
        c.genus = g;
        c.legs = n;
        out.push_back(c);
      }
    }
  }
  for (CobarOperad op : {CobarOperad::Ass, CobarOperad::MAss}) {
    for (int n = 2; n <= max_cobar; ++n) {
      ComplexCase c;
      c.cobar = true;
      c.operad = op;
      c.n = n;
      c.variant = op == CobarOperad::Ass ? GraphVariant::ribbon : GraphVariant::moebius;
      c.legs = n + 1;
      out.push_back(c);
    }
  }
  return out;
}

SurfaceInvariance check_surface_invariance(const GraphFamily& f) {
  SurfaceInvariance r;
  const GraphVariant v = f.query.variant;
  if (v == GraphVariant::dianalytic) throw std::invalid_argument("band surfaces need colours or orientations");
  for (std::size_t i = 0; i < f.levels.size(); ++i) {
    for (const auto& code : f.levels[i]) {
      const HalfEdgeGraph g = decode(code);
      const SurfaceType t = surface_type(g, v);
      ++r.graphs;
      for (int h : g.edges()) {
        if (g.is_loop(h)) continue;
        ++r.contractions;
        const SurfaceType u = surface_type(contract_edge(g, h).graph, v);
        if (!(u == t) && r.failures.size() < 10) {
          r.failures.push_back(code.hex() + " edge " + std::to_string(h) + ": " + t.to_string() + " vs " + u.to_string());
        }
      }
    }
  }
  return r;
}

bool TopDegree::ok() const {
  if (types.empty()) return false;
  for (const auto& [k, v] : types)
    if (v.first != v.second) return false;
  return true;
}

namespace {

int expected_top(const SurfaceKey& k, int legs) {
  const auto [m, u, h] = k;
  return 6 * m + 3 * u + 3 * h + legs - 6;
}

}  // namespace

TopDegree top_degree_from_family(const GraphFamily& f) {
  TopDegree r;
  const GraphVariant v = f.query.variant == GraphVariant::ribbon ? GraphVariant::ribbon : GraphVariant::moebius;
  for (std::size_t i = 0; i < f.levels.size(); ++i) {
    const int e = f.min_edges + static_cast<int>(i);
    for (const auto& code : f.levels[i]) {
      const SurfaceType t = surface_type(decode(code), v);
      const SurfaceKey k{t.handles, t.crosscaps, t.boundaries};
      auto [it, fresh] = r.types.try_emplace(k, e, expected_top(k, f.query.legs));
      if (!fresh) it->second.first = std::max(it->second.first, e);
    }
  }
  return r;
}

TopDegree top_degree_by_expansion(int genus, int legs) {
  TopDegree r;
  for (const auto& seed : one_vertex_seeds(genus, legs, GraphVariant::moebius)) {
    const SurfaceType t = surface_type(seed);
    const SurfaceKey k{t.handles, t.crosscaps, t.boundaries};
    if (r.types.count(k)) continue;
    HalfEdgeGraph g = seed;
    bool kept = true;
    while (true) {
      auto next = vertex_expansions(g);
      if (next.empty()) break;
      g = std::move(next.front());
      const SurfaceType u = surface_type(g);
      kept = kept && u.handles == t.handles && u.crosscaps == t.crosscaps && u.boundaries == t.boundaries;
    }
    // Reduced graphs have 2E + n >= 3V, hence E <= 3 genus - 3 + n.
    const int bound = 3 * genus - 3 + legs;
    const int top = (kept && g.edge_count() <= bound) ? g.edge_count() : -1;
    r.types.emplace(k, std::make_pair(top, expected_top(k, legs)));
  }
  return r;
}

CaseResult run_case(const ComplexCase& c, const CaseOptions& opt) {
  CaseResult r;
  r.c = c;
  const auto t0 = std::chrono::steady_clock::now();
  EnumerationQuery q;
  if (c.cobar) {
    q = {0, c.n + 1, c.variant, std::nullopt};
  } else {
    q = {c.genus, c.legs, c.variant, std::nullopt};
  }
  q.max_graphs = opt.max_graphs;
  GraphFamily f;
  try {
    f = enumerate_graphs(q, opt.complex.exec);
  } catch (const EnumerationBudgetExceeded& e) {
    r.note = e.what();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  r.verified = true;
  r.graphs = f.total();
  if (c.variant != GraphVariant::dianalytic && !c.cobar) {
    if (opt.surface) {
      r.surface = check_surface_invariance(f);
      r.surface_checked = true;
    }
    if (opt.top_degree) {
      r.top = top_degree_from_family(f);
      r.top_checked = true;
    }
  }
  GradedComplex cx = build_complex_from_family(f, opt.complex);
  f = GraphFamily{};  // the complex keeps its own copy of the bases
  if (c.cobar) cx.label = c.label();
  for (int s = cx.min_degree; s <= cx.max_degree(); ++s) r.dims.push_back(cx.dim(s));
  r.d_squared = verify_d_squared(cx);
  if (opt.betti && r.d_squared) r.betti = betti_numbers(cx);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool BasicSurfaces::ok() const {
  auto is = [](const SurfaceType& t, int m, int u, int h) {
    return t.handles == m && t.crosscaps == u && t.boundaries == h;
  };
  return is(handle, 1, 0, 1) && is(crosscap, 0, 1, 1) && is(annulus, 0, 0, 2);
}

BasicSurfaces basic_surfaces() {
  BasicSurfaces b;
  b.handle = surface_type(one_vertex_graph({{1, 0}, {-1, 0}, {-2, 0}, {-1, 0}, {-2, 0}}));
  b.crosscap = surface_type(one_vertex_graph({{1, 0}, {-1, 0}, {-1, 1}}));
  b.annulus = surface_type(one_vertex_graph({{1, 0}, {-1, 0}, {-1, 0}}));
  return b;
}

std::vector<FigureTerm> figure_t_chain() {
  // Root leg 5; the edge is symbol -1, so each tree is {v, w}.
  auto tree = [](std::vector<int> v, std::vector<int> w) {
    std::vector<WordLetter> a, b;
    for (int x : v) a.push_back({x == 0 ? 5 : x, 0});
    for (int x : w) b.push_back({x, 0});
    return graph_from_rotations({a, b});
  };
  return {
      {+1, tree({1, 2, -1, 0}, {3, 4, -1})},
      {-1, tree({2, 1, -1, 0}, {3, 4, -1})},
      {+1, tree({2, -1, 0}, {1, 3, 4, -1})},
      {-1, tree({1, -1, 0}, {2, 3, 4, -1})},
      {+1, tree({1, -1, 4, 0}, {2, 3, -1})},
      {-1, tree({2, -1, 4, 0}, {1, 3, -1})},
      {+1, tree({-1, 4, 0}, {2, 1, 3, -1})},
      {-1, tree({-1, 4, 0}, {1, 2, 3, -1})},
  };
}

int planar_leaf_sign(const HalfEdgeGraph& tree, int root_leg) {
  std::vector<int> order;
  auto walk = [&](auto&& self, int from) -> void {
    for (int h = tree.next(from); h != from; h = tree.next(h)) {
      if (tree.is_leg(h)) {
        order.push_back(tree.leg_label(h) - 1);
      } else {
        self(self, tree.pairing(h));
      }
    }
  };
  walk(walk, tree.leg_half_edge(root_leg));
  return permutation_sign(order);
}

FigureTReport figure_t_check(const ComplexOptions& opt) {
  FigureTReport r;
  GradedComplex c = build_graph_complex({0, 5, GraphVariant::dianalytic, std::nullopt}, opt);
  for (int s = c.min_degree; s <= c.max_degree(); ++s) r.dims.push_back(c.dim(s));
  const bool dsq = verify_d_squared(c);
  if (dsq) r.betti = betti_numbers(c);
  r.b1 = r.betti.count(1) ? r.betti.at(1) : 0;

  std::map<long, long long> t;
  std::set<long> seen;
  r.terms_distinct = true;
  for (const auto& term : figure_t_chain()) {
    const BasisCoordinate bc = basis_coordinate(c, term.graph, reference_orientation(term.graph));
    const long i = bc.index;
    if (i < 0 || !seen.insert(i).second) r.terms_distinct = false;
    // The drawn signs are operadic: leaves carry the sign representation, so
    // a tree whose leaves read sigma in planar order counts sgn(sigma), and
    // the edge passes the root corolla, of degree 3 - valence.
    const int root = term.graph.vertex_of(term.graph.leg_half_edge(5));
    const int flip = planar_leaf_sign(term.graph, 5) * ((term.graph.valence(root) + 1) % 2 ? -1 : 1);
    if (i >= 0) t[i] += term.sign * bc.sign * flip;
  }
  const SparseIntMatrix d1 = differential_matrix(c, 1);
  std::map<int, long long> image;
  for (const auto& e : d1.entries) {
    auto it = t.find(e.col);
    if (it != t.end()) image[e.row] += e.value * it->second;
  }
  r.closed = r.terms_distinct;
  for (auto [row, v] : image) r.closed = r.closed && v == 0;

  SparseIntMatrix d0 = differential_matrix(c, 0);
  const std::size_t base = rank(d0);
  SparseIntMatrix aug = d0;
  aug.cols += 1;
  for (auto [i, v] : t)
    if (v) aug.entries.push_back({static_cast<int>(i), d0.cols, v});
  aug.normalize();
  r.non_bounding = r.terms_distinct && rank(aug) == base + 1;

  // Look for T among the boundaries of one or two corollas.
  std::vector<std::map<int, long long>> cols(d0.cols);
  for (const auto& e : d0.entries) cols[e.col][e.row] = e.value;
  auto same_up_to_sign = [&](std::map<int, long long> x) {
    std::erase_if(x, [](const auto& kv) { return kv.second == 0; });
    std::map<int, long long> neg;
    for (auto [k, v] : x) neg[k] = -v;
    std::map<int, long long> tt(t.begin(), t.end());
    std::erase_if(tt, [](const auto& kv) { return kv.second == 0; });
    return !tt.empty() && (x == tt || neg == tt);
  };
  for (int i = 0; i < d0.cols && r.bounding_chain.empty(); ++i) {
    if (same_up_to_sign(cols[i])) r.bounding_chain = {{i, 1}};
    for (int j = i + 1; j < d0.cols && r.bounding_chain.empty(); ++j) {
      for (int sgn : {1, -1}) {
        auto x = cols[i];
        for (auto [k, v] : cols[j]) x[k] += sgn * v;
        if (same_up_to_sign(x)) {
          r.bounding_chain = {{i, 1}, {j, sgn}};
          break;
        }
      }
    }
  }
  for (auto [i, sgn] : r.bounding_chain) {
    const HalfEdgeGraph g = decode(c.basis(0)[i]);
    std::string w = sgn > 0 ? "+(" : "-(";
    for (int h : g.rotation_at(0)) w += std::to_string(g.leg_label(h) % 5) + (h == g.rotation_at(0).back() ? ")" : " ");
    r.bounding_text.push_back(w);
  }

  GradedComplex m = build_graph_complex({0, 5, GraphVariant::moebius, std::nullopt}, opt);
  for (int s = m.min_degree; s <= m.max_degree(); ++s) r.mobius_dims.push_back(m.dim(s));
  if (verify_d_squared(m)) {
    r.mobius_betti = betti_numbers(m);
    r.mobius_top_only = true;
    for (auto [s, b] : r.mobius_betti)
      if (s != m.max_degree() && b != 0) r.mobius_top_only = false;
  }
  if (!dsq) r.closed = false;
  return r;
}

std::vector<ClosureWitness> closure_witnesses() {
  std::vector<ClosureWitness> out;
  {
    ClosureWitness w;
    w.name = "leg passes a crosscap";
    w.left = one_vertex_graph({{1, 0}, {2, 0}, {-1, 0}, {-1, 1}});
    w.right = one_vertex_graph({{2, 0}, {-1, 0}, {1, 1}, {-1, 1}});
    const auto rep = closure_classes(1, 2);
    const int a = rep.class_index(w.left), b = rep.class_index(w.right);
    w.merged = a >= 0 && a == b;
    out.push_back(std::move(w));
  }
  {
    ClosureWitness w;
    w.name = "three crosscaps = handle + crosscap";
    w.left = one_vertex_graph({{1, 0}, {-1, 0}, {-1, 1}, {-2, 0}, {-2, 1}, {-3, 0}, {-3, 1}});
    w.right = one_vertex_graph({{1, 0}, {-1, 0}, {-2, 0}, {-1, 0}, {-2, 0}, {-3, 0}, {-3, 1}});
    const auto rep = closure_classes(3, 1);
    const int a = rep.class_index(w.left), b = rep.class_index(w.right);
    w.merged = a >= 0 && a == b;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace klein
