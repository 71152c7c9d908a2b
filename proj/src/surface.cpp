#include "klein/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace klein {

std::vector<std::vector<BoundaryState>> boundary_walk(const HalfEdgeGraph& g) {
  const int h_count = g.half_edge_count();
  std::vector<int> prev(h_count);
  for (int h = 0; h < h_count; ++h) prev[g.next(h)] = h;
  auto slot = [](int h, int d) { return 2 * h + (d < 0 ? 1 : 0); };
  std::vector<char> seen(2 * h_count, 0);
  std::vector<std::vector<BoundaryState>> out;
  for (int h0 = 0; h0 < h_count; ++h0) {
    for (int d0 : {1, -1}) {
      if (seen[slot(h0, d0)]) continue;
      std::vector<BoundaryState> walk;
      int h = h0, d = d0;
      while (!seen[slot(h, d)]) {
        seen[slot(h, d)] = 1;
        walk.push_back({h, d});
        const int hp = g.pairing(h);
        d = g.twist(h) ? -d : d;
        h = d > 0 ? g.next(hp) : prev[hp];
      }
      if (h != h0 || d != d0) throw std::logic_error("boundary walk is not a permutation");
      out.push_back(std::move(walk));
    }
  }
  return out;
}

std::vector<int> orienting_gauge(const HalfEdgeGraph& g) {
  const int v_count = g.vertex_count();
  std::vector<int> eps(v_count, -1);
  std::vector<std::vector<int>> at(v_count);
  for (int h = 0; h < g.half_edge_count(); ++h) at[g.vertex_of(h)].push_back(h);
  eps[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    for (int h : at[v]) {
      if (g.is_leg(h)) continue;
      const int w = g.vertex_of(g.pairing(h));
      if (eps[w] < 0) {
        eps[w] = eps[v] ^ g.twist(h);
        queue.push_back(w);
      }
    }
  }
  for (int h = 0; h < g.half_edge_count(); ++h) {
    if (g.is_leg(h)) continue;
    if (g.twist(h) ^ eps[g.vertex_of(h)] ^ eps[g.vertex_of(g.pairing(h))]) return {};
  }
  return eps;
}

namespace {

using Word = std::vector<LegMark>;

Word min_rotation(const Word& w) {
  Word best = w;
  for (std::size_t s = 1; s < w.size(); ++s) {
    Word r(w.begin() + static_cast<long>(s), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(s));
    if (r < best) best = std::move(r);
  }
  return best;
}

Word reversed(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& m : r) m.flipped ^= 1;
  return r;
}

Word leg_word(const HalfEdgeGraph& g, const std::vector<BoundaryState>& walk, bool keep_direction) {
  Word w;
  for (const auto& s : walk) {
    if (!g.is_leg(s.half_edge)) continue;
    const int r = keep_direction ? (g.color(s.half_edge) ^ (s.side < 0 ? 1 : 0)) : 0;
    w.push_back({g.leg_label(s.half_edge), r});
  }
  return w;
}

}  // namespace

SurfaceType surface_type(const HalfEdgeGraph& input, GraphVariant variant) {
  for (int vg : input.data().vertex_genus) {
    if (vg != 0) throw GraphError(GraphErrorKind::Malformed, "band surfaces need genus-0 vertices");
  }
  HalfEdgeGraph g = variant == GraphVariant::ribbon ? project_variant(input, variant).graph : input;
  const bool directed_legs = variant == GraphVariant::ribbon || variant == GraphVariant::moebius;

  const auto gauge = orienting_gauge(g);
  const bool orientable = !gauge.empty();
  if (orientable) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (gauge[v]) g = reflect_vertex(g, v);
    }
  }
  const auto walks = boundary_walk(g);
  SurfaceType t;
  t.boundaries = static_cast<int>(walks.size()) / 2;
  const int chi = g.vertex_count() - g.edge_count();
  if (orientable) {
    t.crosscaps = 0;
    t.handles = (2 - t.boundaries - chi) / 2;
    std::vector<Word> fwd, bwd;
    for (const auto& w : walks) {
      if (w.front().side < 0) continue;
      const Word word = leg_word(g, w, directed_legs);
      fwd.push_back(min_rotation(word));
      bwd.push_back(min_rotation(reversed(word)));
    }
    std::sort(fwd.begin(), fwd.end());
    std::sort(bwd.begin(), bwd.end());
    t.boundary_legs = (variant == GraphVariant::ribbon || fwd <= bwd) ? fwd : bwd;
  } else {
    const int hat_u = 2 - t.boundaries - chi;
    t.crosscaps = hat_u % 2 ? 1 : 2;
    t.handles = (hat_u - t.crosscaps) / 2;
    std::vector<Word> words;
    for (const auto& w : walks) {
      const Word word = leg_word(g, w, directed_legs);
      words.push_back(std::min(min_rotation(word), min_rotation(reversed(word))));
    }
    std::sort(words.begin(), words.end());
    for (std::size_t i = 0; i < words.size(); i += 2) {
      if (words[i] != words[i + 1]) throw std::logic_error("boundary orbits do not pair up");
      t.boundary_legs.push_back(words[i]);
    }
  }
  if (static_cast<int>(t.boundary_legs.size()) != t.boundaries) throw std::logic_error("boundary count mismatch");
  const int genus = input.genus();
  if (2 * t.handles + t.boundaries + t.crosscaps - 1 != genus || t.handles < 0 ||
      chi != 2 - 2 * t.handles - t.crosscaps - t.boundaries) {
    throw std::logic_error("surface type " + t.to_string() + " inconsistent with graph genus " +
                           std::to_string(genus));
  }
  return t;
}

std::string SurfaceType::boundary_partition() const {
  std::ostringstream os;
  for (const auto& w : boundary_legs) {
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i].label << (w[i].flipped ? "'" : "");
    os << ']';
  }
  return os.str();
}

std::string SurfaceType::to_string() const {
  std::ostringstream os;
  os << '(' << handles << ',' << crosscaps << ',' << boundaries << ") " << boundary_partition();
  return os.str();
}

}  // namespace klein
