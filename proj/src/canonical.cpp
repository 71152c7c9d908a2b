#include "klein/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>

#include "klein/orientation.hpp"

namespace klein {

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::uint64_t CanonicalCode::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  mix(static_cast<unsigned char>(variant));
  for (unsigned char c : bytes) mix(c);
  return h;
}

namespace {

constexpr unsigned char kVersion = 1;
constexpr int kForward = 128;
constexpr int kLeg = 192;

// How colours enter the code.
enum class ColorMode : unsigned char {
  none = 0,    // ribbon, dianalytic
  parity = 1,  // reduced moebius: twist parity of edges plus leg colours
  full = 2,    // non-reduced moebius: every half-edge colour
};

struct Setup {
  ColorMode colors;
  bool leg_colors;       // leg colour bits are part of the code
  bool free_reflection;  // each vertex may be read in either direction independently
  bool any_reflection;   // reflections allowed at all
};

Setup setup_for(const HalfEdgeGraph& g, GraphVariant v) {
  switch (v) {
    case GraphVariant::ribbon:
      return {ColorMode::none, false, false, false};
    case GraphVariant::dianalytic:
      return {ColorMode::none, false, true, true};
    case GraphVariant::moebius:
    case GraphVariant::moebius_leg_unoriented: {
      const bool legs = v == GraphVariant::moebius;
      if (g.is_reduced()) return {ColorMode::parity, legs, false, true};
      return {ColorMode::full, legs, true, true};
    }
  }
  return {ColorMode::none, false, false, false};
}

struct State {
  std::vector<int> idx;          // half-edge -> canonical index
  std::vector<int> disc;         // vertex -> discovery index
  std::vector<int> order;        // vertices in discovery order
  std::vector<int> entry;        // vertex -> entry half-edge
  std::vector<signed char> eps;  // vertex -> reading direction, -1 undecided
  int next_index = 0;
  std::string code;
  std::uint64_t best_version = ~0ull;
  int rel = 0;  // comparison of code with best's prefix, valid for best_version
};

class Search {
 public:
  Search(const HalfEdgeGraph& g, GraphVariant variant, bool all_leaves)
      : g_(g), variant_(variant), setup_(setup_for(g, variant)), all_leaves_(all_leaves) {}

  CanonicalForm run() {
    const int h_count = g_.half_edge_count();
    const int v_count = g_.vertex_count();
    std::string header;
    header.push_back(static_cast<char>(kVersion));
    header.push_back(static_cast<char>(variant_));
    header.push_back(static_cast<char>(setup_.colors));
    header.push_back(static_cast<char>(h_count));
    header.push_back(static_cast<char>(v_count));
    header.push_back(static_cast<char>(g_.leg_count()));
    header.push_back(static_cast<char>(g_.genus()));

    std::vector<int> starts;
    if (g_.leg_count() > 0) {
      starts.push_back(g_.leg_half_edge(1));
    } else {
      for (int h = 0; h < h_count; ++h) starts.push_back(h);
    }
    for (int h0 : starts) {
      for (int e0 = 0; e0 <= (setup_.any_reflection ? 1 : 0); ++e0) {
        State s;
        s.idx.assign(h_count, -1);
        s.disc.assign(v_count, -1);
        s.entry.assign(v_count, -1);
        s.eps.assign(v_count, -1);
        s.code = header;
        const int v0 = g_.vertex_of(h0);
        s.disc[v0] = 0;
        s.order.push_back(v0);
        s.entry[v0] = h0;
        s.eps[v0] = static_cast<signed char>(e0);
        if (!check_prefix(s)) continue;
        process(std::move(s), 0);
      }
    }
    CanonicalForm out;
    out.code = {variant_, best_};
    out.labelings = std::move(leaves_);
    return out;
  }

 private:
  // Returns false if the current code already exceeds the best prefix.
  bool check_prefix(State& s) {
    if (!have_best_) return true;
    if (s.best_version != version_) {
      s.rel = s.code.compare(0, s.code.size(), best_, 0, s.code.size());
      s.rel = s.rel < 0 ? -1 : (s.rel > 0 ? 1 : 0);
      s.best_version = version_;
    }
    return s.rel <= 0;
  }

  bool emit(State& s, int byte) {
    const std::size_t p = s.code.size();
    s.code.push_back(static_cast<char>(byte));
    if (!have_best_) return true;
    if (s.best_version != version_) return check_prefix(s);
    if (s.rel == 0) {
      const auto a = static_cast<unsigned char>(byte);
      const auto b = static_cast<unsigned char>(best_[p]);
      if (a < b) s.rel = -1;
      if (a > b) s.rel = 1;
    }
    return s.rel <= 0;
  }

  void process(State s, std::size_t qi) {
    const int v = s.order[qi];
    const int ev = s.eps[v];
    const int d = g_.valence(v);
    if (!emit(s, d) || !emit(s, g_.data().vertex_genus[v])) return;
    std::vector<int> cyc;
    cyc.reserve(d);
    int x = s.entry[v];
    for (int k = 0; k < d; ++k) {
      cyc.push_back(x);
      s.idx[x] = s.next_index++;
      x = ev ? g_.prev(x) : g_.next(x);
    }
    for (int h : cyc) {
      int a = 0, b = 0;
      if (g_.is_leg(h)) {
        a = kLeg + g_.leg_label(h);
        if (setup_.leg_colors) b = g_.color(h) ^ ev;
      } else {
        const int y = g_.pairing(h);
        const int w = g_.vertex_of(y);
        if (s.idx[y] >= 0) {
          a = s.idx[y];
        } else {
          if (s.disc[w] < 0) {
            s.disc[w] = static_cast<int>(s.order.size());
            s.order.push_back(w);
            s.entry[w] = y;
            if (setup_.colors == ColorMode::parity) {
              s.eps[w] = static_cast<signed char>(ev ^ g_.twist(h));
            } else if (!setup_.free_reflection) {
              s.eps[w] = 0;
            }
          }
          a = kForward + s.disc[w];
        }
        if (setup_.colors == ColorMode::parity) {
          b = g_.twist(h) ^ ev ^ s.eps[w];
        } else if (setup_.colors == ColorMode::full) {
          b = g_.color(h) ^ ev;
        }
      }
      if (!emit(s, a) || !emit(s, b)) return;
    }
    if (qi + 1 == s.order.size()) {
      leaf(s);
      return;
    }
    const int w = s.order[qi + 1];
    if (s.eps[w] >= 0) {
      process(std::move(s), qi + 1);
      return;
    }
    State alt = s;
    s.eps[w] = 0;
    process(std::move(s), qi + 1);
    alt.eps[w] = 1;
    if (check_prefix(alt)) process(std::move(alt), qi + 1);
  }

  void leaf(State& s) {
    const int c = have_best_ ? s.code.compare(best_) : -1;
    if (c > 0) return;
    if (c < 0) {
      best_ = s.code;
      have_best_ = true;
      ++version_;
      leaves_.clear();
      leaves_.push_back(s.idx);
    } else if (all_leaves_) {
      leaves_.push_back(s.idx);
    }
  }

  const HalfEdgeGraph& g_;
  GraphVariant variant_;
  Setup setup_;
  bool all_leaves_;
  bool have_best_ = false;
  std::uint64_t version_ = 0;
  std::string best_;
  std::vector<std::vector<int>> leaves_;
};

}  // namespace

CanonicalForm canonical_form(const HalfEdgeGraph& g, GraphVariant variant, bool all_leaves) {
  return Search(g, variant, all_leaves).run();
}

CanonicalCode canonical_code(const HalfEdgeGraph& g, GraphVariant variant) {
  return canonical_form(g, variant, false).code;
}

HalfEdgeGraph decode(const CanonicalCode& code) {
  const std::string& b = code.bytes;
  auto at = [&](std::size_t i) {
    if (i >= b.size()) throw GraphError(GraphErrorKind::Malformed, "truncated canonical code");
    return static_cast<int>(static_cast<unsigned char>(b[i]));
  };
  if (at(0) != kVersion) throw GraphError(GraphErrorKind::Malformed, "unknown canonical code version");
  const auto mode = static_cast<ColorMode>(at(2));
  const int h_count = at(3), v_count = at(4), n = at(5);
  GraphData d;
  d.pairing.assign(h_count, -1);
  d.vertex.assign(h_count, -1);
  d.next.assign(h_count, -1);
  d.color.assign(h_count, 0);
  d.legs.assign(n, -1);
  d.vertex_genus.assign(v_count, 0);
  std::vector<int> bits(h_count, 0);
  std::size_t p = 7;
  int c = 0;
  for (int v = 0; v < v_count; ++v) {
    const int val = at(p++);
    d.vertex_genus[v] = at(p++);
    for (int k = 0; k < val; ++k) {
      const int h = c + k;
      if (h >= h_count) throw GraphError(GraphErrorKind::Malformed, "canonical code overflows");
      d.vertex[h] = v;
      d.next[h] = c + (k + 1) % val;
      const int a = at(p++);
      bits[h] = at(p++);
      if (a >= kLeg) {
        d.pairing[h] = h;
        if (a - kLeg < 1 || a - kLeg > n) throw GraphError(GraphErrorKind::Malformed, "bad leg token");
        d.legs[a - kLeg - 1] = h;
        d.color[h] = static_cast<std::uint8_t>(bits[h]);
      } else if (a < kForward) {
        d.pairing[h] = a;
        d.pairing[a] = h;
      }
    }
    c += val;
  }
  if (mode == ColorMode::parity) {
    for (int h = 0; h < h_count; ++h) {
      if (d.pairing[h] > h) d.color[d.pairing[h]] = static_cast<std::uint8_t>(bits[h]);
    }
  } else if (mode == ColorMode::full) {
    for (int h = 0; h < h_count; ++h) d.color[h] = static_cast<std::uint8_t>(bits[h]);
  }
  return HalfEdgeGraph::validate(std::move(d));
}

bool isomorphic(const HalfEdgeGraph& a, const HalfEdgeGraph& b, GraphVariant variant) {
  if (a.half_edge_count() != b.half_edge_count() || a.vertex_count() != b.vertex_count() ||
      a.leg_count() != b.leg_count()) {
    return false;
  }
  return canonical_code(a, variant) == canonical_code(b, variant);
}

int reversal_sign(int valence) { return valence % 2 ? -1 : 1; }

int dianalytic_transport_sign(const HalfEdgeGraph& src, const std::vector<int>& map, const HalfEdgeGraph& dst) {
  int sign = 1;
  for (int v = 0; v < src.vertex_count(); ++v) {
    const auto rot = src.rotation_at(v);
    const int h = rot.front();
    if (rot.size() > 2 && dst.next(map[h]) != map[src.next(h)]) sign *= reversal_sign(static_cast<int>(rot.size()));
  }
  return sign;
}

AutomorphismReport automorphism_signs(const HalfEdgeGraph& g, GraphVariant variant) {
  const CanonicalForm f = canonical_form(g, variant, true);
  const int h_count = g.half_edge_count();
  const auto& l0 = f.labelings.front();
  std::vector<int> inv0(h_count);
  AutomorphismReport r;
  r.group_order = f.labelings.size();
  const Orientation ref = reference_orientation(g);
  std::vector<std::pair<std::vector<int>, int>> autos;
  for (std::size_t i = 0; i < f.labelings.size(); ++i) {
    const auto& li = f.labelings[i];
    std::vector<int> inv(h_count);
    for (int h = 0; h < h_count; ++h) inv[li[h]] = h;
    // alpha(h) = the half-edge that L_i puts where L_0 puts h.
    std::vector<int> alpha(h_count);
    bool identity = true;
    for (int h = 0; h < h_count; ++h) {
      alpha[h] = inv[l0[h]];
      identity = identity && alpha[h] == h;
    }
    if (identity) continue;
    int s = transport_sign(g, ref, alpha, g, ref);
    if (variant == GraphVariant::dianalytic) s *= dianalytic_transport_sign(g, alpha, g);
    if (s < 0) r.orientation_reversing_exists = true;
    autos.emplace_back(std::move(alpha), s);
  }
  std::sort(autos.begin(), autos.end());
  for (auto& [perm, s] : autos) {
    r.generators.push_back(std::move(perm));
    r.signs.push_back(s);
  }
  return r;
}

}  // namespace klein
