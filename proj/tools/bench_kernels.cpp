// Serial reference against the OpenMP kernels: enumeration and differential
// assembly. Results must agree exactly; timings go to standard output.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "klein/complex.hpp"
#include "klein/enumerate.hpp"

using namespace klein;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const GradedComplex& a, const GradedComplex& b) {
  if (a.bases != b.bases || a.differentials.size() != b.differentials.size()) return false;
  for (std::size_t i = 0; i < a.differentials.size(); ++i)
    if (a.differentials[i].entries != b.differentials[i].entries) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 1;
  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %8s %s\n", "case", "serial s", "omp s", "speedup", "agree");
  bool all = true;
  for (auto [v, g, n] : std::vector<std::tuple<GraphVariant, int, int>>{
           {GraphVariant::ribbon, 2, 2}, {GraphVariant::moebius, 2, 2}, {GraphVariant::moebius, 1, 4}, {GraphVariant::dianalytic, 2, 3}}) {
    const EnumerationQuery q{g, n, v, std::nullopt};
    GradedComplex s, p;
    double ts = 0, tp = 0;
    for (int r = 0; r < reps; ++r) {
      ts += seconds([&] { s = build_graph_complex(q, {Exec::serial, 0}); });
      tp += seconds([&] { p = build_graph_complex(q, {Exec::parallel, 0}); });
    }
    const bool agree = same(s, p);
    all = all && agree;
    char label[64];
    std::snprintf(label, sizeof label, "%s (%d,%d)", to_string(v), g, n);
    std::printf("%-28s %10.3f %10.3f %8.2f %s\n", label, ts / reps, tp / reps, ts / tp, agree ? "yes" : "NO");
  }
  return all ? 0 : 2;
}
