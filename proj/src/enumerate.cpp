#include "klein/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include <omp.h>

namespace klein {

std::size_t GraphFamily::total() const {
  std::size_t t = 0;
  for (const auto& level : levels) t += level.size();
  return t;
}

const std::vector<CanonicalCode>& GraphFamily::with_edges(int e) const {
  static const std::vector<CanonicalCode> empty;
  const int i = e - min_edges;
  if (i < 0 || i >= static_cast<int>(levels.size())) return empty;
  return levels[i];
}

long GraphFamily::index_of(int edges, const CanonicalCode& c) const {
  const auto& level = with_edges(edges);
  const auto it = std::lower_bound(level.begin(), level.end(), c);
  if (it == level.end() || !(*it == c)) return -1;
  return static_cast<long>(it - level.begin());
}

std::vector<std::size_t> level_sizes(const GraphFamily& f) {
  std::vector<std::size_t> out;
  if (f.levels.empty()) return out;
  out.assign(f.max_edges_found() + 1, 0);
  for (std::size_t i = 0; i < f.levels.size(); ++i) out[f.min_edges + i] = f.levels[i].size();
  return out;
}

namespace {

bool colored(GraphVariant v) {
  return v == GraphVariant::moebius || v == GraphVariant::moebius_leg_unoriented;
}

// Calls f on every perfect matching of `free` (as a pairing vector indexed by position).
void for_each_matching(std::vector<int>& pair, std::vector<int>& free, const std::function<void()>& f) {
  if (free.empty()) {
    f();
    return;
  }
  const int a = free.back();
  free.pop_back();
  for (std::size_t i = 0; i < free.size(); ++i) {
    const int b = free[i];
    free.erase(free.begin() + static_cast<long>(i));
    pair[a] = b;
    pair[b] = a;
    for_each_matching(pair, free, f);
    free.insert(free.begin() + static_cast<long>(i), b);
  }
  free.push_back(a);
}

}  // namespace

std::vector<HalfEdgeGraph> one_vertex_seeds(int loops, int legs, GraphVariant variant) {
  std::vector<HalfEdgeGraph> out;
  const int h_count = 2 * loops + legs;
  if (h_count == 0) return out;
  const bool twist = colored(variant);
  const bool leg_colors = variant == GraphVariant::moebius;

  std::vector<int> leg_at(h_count, 0);  // position -> label, 0 for loop halves
  std::vector<int> pair(h_count, -1);

  auto emit = [&]() {
    // Loop ids in order of first appearance; loop k gets twist bit k.
    std::vector<int> loop_id(h_count, 0);
    int next_id = 0;
    for (int p = 0; p < h_count; ++p) {
      if (leg_at[p] == 0 && loop_id[p] == 0) {
        loop_id[p] = loop_id[pair[p]] = -(++next_id);
      }
    }
    const int twist_bits = twist ? loops : 0;
    const int leg_bits = (leg_colors && legs > 1) ? legs - 1 : 0;
    for (int mask = 0; mask < (1 << (twist_bits + leg_bits)); ++mask) {
      std::vector<WordLetter> word(h_count);
      for (int p = 0; p < h_count; ++p) {
        if (leg_at[p]) {
          const int label = leg_at[p];
          const std::uint8_t c = label > 1 ? static_cast<std::uint8_t>((mask >> (twist_bits + label - 2)) & 1) : 0;
          word[p] = {label, leg_bits ? c : std::uint8_t{0}};
        } else {
          const int id = -loop_id[p];
          const bool second = pair[p] < p;
          const std::uint8_t c = second ? static_cast<std::uint8_t>((mask >> (id - 1)) & 1) : 0;
          word[p] = {loop_id[p], twist_bits ? c : std::uint8_t{0}};
        }
      }
      out.push_back(one_vertex_graph(word));
    }
  };

  auto with_legs_placed = [&]() {
    std::vector<int> free;
    for (int p = h_count - 1; p >= 0; --p) {
      if (!leg_at[p]) free.push_back(p);
    }
    for_each_matching(pair, free, emit);
  };

  if (legs == 0) {
    with_legs_placed();
    return out;
  }
  // Leg 1 sits at position 0; place legs 2..n anywhere else.
  leg_at[0] = 1;
  std::function<void(int)> place = [&](int label) {
    if (label > legs) {
      with_legs_placed();
      return;
    }
    for (int p = 1; p < h_count; ++p) {
      if (leg_at[p]) continue;
      leg_at[p] = label;
      place(label + 1);
      leg_at[p] = 0;
    }
  };
  place(2);
  return out;
}

std::vector<HalfEdgeGraph> vertex_expansions(const HalfEdgeGraph& g) {
  std::vector<HalfEdgeGraph> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto rot = g.rotation_at(v);
    const int d = static_cast<int>(rot.size());
    if (d < 4) continue;
    for (int len = 2; len <= d - 2; ++len) {
      // An interval and its complement give the same split, so for len = d/2
      // only half of the starting points are needed.
      const int starts = (2 * len == d) ? d / 2 : d;
      for (int s = 0; s < starts; ++s) out.push_back(expand_vertex(g, rot[s], len));
    }
  }
  return out;
}

namespace {

using CodeSet = std::unordered_set<CanonicalCode, CanonicalCodeHash>;

std::vector<CanonicalCode> dedup(std::vector<std::vector<CanonicalCode>>& chunks) {
  CodeSet seen;
  std::vector<CanonicalCode> codes;
  for (auto& chunk : chunks) {
    for (auto& c : chunk) {
      if (seen.insert(c).second) codes.push_back(std::move(c));
    }
    chunk.clear();
    chunk.shrink_to_fit();
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

template <typename Producer>
std::vector<CanonicalCode> canonical_level(std::size_t count, Producer produce, GraphVariant variant,
                                        const EnumerationQuery& q, Exec exec, std::size_t remaining) {
  const int threads = exec == Exec::parallel ? omp_get_max_threads() : 1;
  std::vector<std::vector<CanonicalCode>> chunks(threads);
  auto keep = [&](const HalfEdgeGraph& g) {
    return !q.filter || q.filter->matches(surface_type(g, variant));
  };
  // Undeduplicated codes are bounded too, so a hopeless level stops early.
  const std::size_t raw_cap = remaining == 0 ? 0 : 4 * remaining + 1024;
  std::atomic<std::size_t> raw{0};
  std::atomic<bool> over{false};
  auto work = [&](std::size_t i, std::vector<CanonicalCode>& mine) {
    if (over.load(std::memory_order_relaxed)) return;
    const auto gs = produce(i);
    for (const auto& g : gs) {
      if (keep(g)) mine.push_back(canonical_code(g, variant));
    }
    if (raw_cap && raw.fetch_add(gs.size(), std::memory_order_relaxed) + gs.size() > raw_cap) over = true;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      auto& mine = chunks[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
      for (std::size_t i = 0; i < count; ++i) work(i, mine);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) work(i, chunks[0]);
  }
  if (over) throw EnumerationBudgetExceeded("enumeration exceeds " + std::to_string(q.max_graphs) + " graphs");
  auto level = dedup(chunks);
  if (remaining && level.size() > remaining) {
    throw EnumerationBudgetExceeded("enumeration exceeds " + std::to_string(q.max_graphs) + " graphs");
  }
  return level;
}

}  // namespace

GraphFamily enumerate_graphs(const EnumerationQuery& q, Exec exec) {
  GraphFamily fam;
  fam.query = q;
  fam.min_edges = q.genus;
  if (!q.stable() || q.genus < 0 || q.legs < 0) return fam;
  if (q.filter && q.variant == GraphVariant::dianalytic) {
    throw std::invalid_argument("dianalytic graphs carry no surface type to filter on");
  }
  const std::vector<HalfEdgeGraph> seeds = one_vertex_seeds(q.genus, q.legs, q.variant);
  std::size_t total = 0;
  auto remaining = [&]() { return q.max_graphs == 0 ? std::size_t{0} : q.max_graphs - total; };
  fam.levels.push_back(canonical_level(
      seeds.size(), [&](std::size_t i) { return std::vector<HalfEdgeGraph>{seeds[i]}; }, q.variant, q, exec,
      remaining()));
  total += fam.levels.back().size();
  // Each expansion adds one vertex; trivalent graphs stop the process.
  for (int e = q.genus + 1; e <= q.max_edges(); ++e) {
    const auto& prev = fam.levels.back();
    auto next = canonical_level(
        prev.size(), [&](std::size_t i) { return vertex_expansions(decode(prev[i])); }, q.variant, q, exec,
        remaining());
    if (next.empty()) break;
    total += next.size();
    fam.levels.push_back(std::move(next));
  }
  if (fam.levels.front().empty()) fam.levels.clear();
  return fam;
}

GraphFamily enumerate_trees(int n, GraphVariant variant, Exec exec) {
  EnumerationQuery q;
  q.genus = 0;
  q.legs = n + 1;
  q.variant = variant;
  return enumerate_graphs(q, exec);
}

}  // namespace klein
