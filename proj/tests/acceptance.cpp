// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// all of them pass. Cases larger than KLEIN_ACCEPTANCE_BUDGET graphs
// (default 10000000) are reported as not verified and fail their criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "klein/algebra.hpp"
#include "klein/enumerate.hpp"
#include "klein/operad.hpp"
#include "klein/surface.hpp"
#include "klein/verify.hpp"

using namespace klein;

namespace {

int failures = 0;

void criterion(int k, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

void info(const std::string& s) { std::cout << "  " << s << std::endl; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::size_t budget() {
  const char* s = std::getenv("KLEIN_ACCEPTANCE_BUDGET");
  return s ? std::strtoull(s, nullptr, 10) : 10000000;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const std::size_t max_graphs = budget();
  std::cout << "graph budget per complex: " << max_graphs << std::endl;

  // 1, and the data reused by 2, 6 and 8.
  std::vector<CaseResult> results;
  {
    CaseOptions opt;
    opt.max_graphs = max_graphs;
    opt.surface = true;
    opt.top_degree = true;
    bool ok = true;
    std::size_t skipped = 0;
    for (const auto& c : standard_cases(3, 4, 6)) {
      CaseResult r = run_case(c, opt);
      std::ostringstream line;
      line << c.label() << ": ";
      if (!r.verified) {
        line << "NOT VERIFIED, " << r.note;
        ok = false;
        ++skipped;
      } else {
        line << (r.d_squared ? "d^2 = 0" : "d^2 != 0") << ", " << r.graphs << " graphs, dims " << join(r.dims);
        ok = ok && r.d_squared;
      }
      char t[32];
      std::snprintf(t, sizeof t, " [%.1fs]", r.seconds);
      info(line.str() + t);
      results.push_back(std::move(r));
    }
    criterion(1, "d^2 = 0 on every graph and cobar complex in range", ok,
              skipped ? std::to_string(skipped) + " complexes over budget" : "");
  }

  // 2
  {
    bool ok = true;
    for (int n = 2; n <= 6; ++n) {
      std::vector<std::size_t> ass, mass;
      for (const auto& r : results) {
        if (!r.c.cobar || r.c.n != n || !r.verified) continue;
        (r.c.operad == CobarOperad::Ass ? ass : mass) = r.dims;
      }
      if (ass.empty()) ass = level_sizes(enumerate_trees(n, GraphVariant::ribbon));
      if (mass.empty()) mass = level_sizes(enumerate_trees(n, GraphVariant::moebius));
      bool split = ass.size() == mass.size();
      for (std::size_t i = 0; split && i < ass.size(); ++i) split = mass[i] == (std::size_t{1} << n) * ass[i];
      info("n = " + std::to_string(n) + ": Ass " + join(ass) + " / MAss " + join(mass) + (split ? "" : "  MISMATCH"));
      ok = ok && split;
    }
    criterion(2, "dim C(MAss)(n) = 2^n dim C(Ass)(n) degreewise, 2 <= n <= 6", ok);
  }

  // 3
  {
    bool ok = true;
    for (int n = 2; n <= 5; ++n) {
      const auto k = koszul_check(n);
      info("n = " + std::to_string(n) + ": betti Ass " + join(k.betti_ass) + ", MAss " + join(k.betti_mass) +
           (k.pass() ? "" : "  FAILED"));
      ok = ok && k.pass();
    }
    criterion(3, "cobar homology only in top degree, of dimension n! and 2^n n!, 2 <= n <= 5", ok);
  }

  // 4
  {
    const auto d = quadratic_duality_check();
    info("F(E)(3) " + std::to_string(d.dim_free) + ", R " + std::to_string(d.dim_relations) + ", Psi(R) " +
         std::to_string(d.dim_image) + ", R-perp " + std::to_string(d.dim_annihilator));
    criterion(4, "Psi(R) = R-perp and dim R = dim F(E)(3) / 2", d.pass());
  }

  // 5
  {
    const auto f = figure_t_check();
    std::string chain;
    for (const auto& s : f.bounding_text) chain += " " + s;
    info(std::string("terms distinct ") + (f.terms_distinct ? "yes" : "no") + ", closed " + (f.closed ? "yes" : "no") +
         ", boundary " + (f.non_bounding ? "no" : "yes") + (chain.empty() ? "" : " of" + chain));
    info("dianalytic (0,5) dims " + join(f.dims) + ", b1 = " + std::to_string(f.b1));
    std::vector<std::size_t> mb;
    for (auto [s, b] : f.mobius_betti) mb.push_back(b);
    info("moebius (0,5) dims " + join(f.mobius_dims) + ", betti " + join(mb));
    criterion(5, "the eight-term tree chain is a non-bounding cycle, b1 >= 1, coloured trees acyclic below top",
              f.pass());
  }

  // 6
  {
    bool ok = true;
    std::size_t graphs = 0, contractions = 0, unchecked = 0;
    for (const auto& r : results) {
      if (r.c.cobar || r.c.variant == GraphVariant::dianalytic) continue;
      if (!r.surface_checked) {
        ++unchecked;
        ok = false;
        continue;
      }
      graphs += r.surface.graphs;
      contractions += r.surface.contractions;
      for (const auto& f : r.surface.failures) info(r.c.label() + ": " + f);
      ok = ok && r.surface.ok();
    }
    const auto b = basic_surfaces();
    info("handle " + b.handle.to_string() + ", crosscap " + b.crosscap.to_string() + ", annulus " +
         b.annulus.to_string());
    std::string detail = std::to_string(graphs) + " graphs, " + std::to_string(contractions) + " contractions";
    if (unchecked) detail += ", " + std::to_string(unchecked) + " families not enumerated";
    criterion(6, "surface type is invariant under edge contraction; basic surfaces", ok && b.ok(), detail);
  }

  // 7
  {
    bool ok = true;
    for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {1, 1}, {1, 2}, {2, 1}}) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto c = closure_classes(g, n);
      char t[32];
      std::snprintf(t, sizeof t, " [%.1fs]", since(t0));
      info("(" + std::to_string(g) + "," + std::to_string(n) + "): " + std::to_string(c.graphs) + " graphs, " +
           std::to_string(c.classes.size()) + " classes, " + std::to_string(c.distinct_invariants) +
           " surface invariants" + t);
      ok = ok && c.exact;
    }
    for (const auto& w : closure_witnesses()) {
      info(w.name + (w.merged ? ": merged" : ": NOT merged"));
      ok = ok && w.merged;
    }
    criterion(7, "closure classes match surface invariants; witness pairs merge", ok);
  }

  // 8
  {
    bool ok = true;
    std::size_t types = 0, by_expansion = 0;
    for (const auto& r : results) {
      if (r.c.cobar || r.c.variant != GraphVariant::moebius) continue;
      TopDegree t = r.top;
      if (!r.top_checked) {
        // Not enumerated: the types are still all reached by splitting
        // vertices of one-vertex graphs up to the trivalent maximum.
        t = top_degree_by_expansion(r.c.genus, r.c.legs);
        ++by_expansion;
        info(r.c.label() + ": by vertex expansion");
      }
      for (const auto& [key, v] : t.types) {
        ++types;
        if (v.first != v.second) {
          const auto [m, u, h] = key;
          info(r.c.label() + ": type (" + std::to_string(m) + "," + std::to_string(u) + "," + std::to_string(h) +
               ") tops out at " + std::to_string(v.first) + ", expected " + std::to_string(v.second));
        }
      }
      ok = ok && t.ok();
    }
    criterion(8, "top edge count of each type is 6m + 3u + 3h + n - 6", ok,
              std::to_string(types) + " types" +
                  (by_expansion ? ", " + std::to_string(by_expansion) + " families by expansion" : ""));
  }

  // 9
  {
    const bool transpose = check_frobenius_involution(matrix_algebra_transpose()).pass();
    const bool z3 = check_frobenius_involution(cyclic_group_algebra(3)).pass();
    const auto bad = check_frobenius_involution(matrix_algebra_identity_involution());
    const auto& anti = bad.get("anti_automorphism");
    const bool rejected = !bad.pass() && !anti.ok && !anti.witnesses.empty();
    const auto graded = check_involutive_ainfty_signs(exterior_algebra_two_odd());
    const auto m3 = check_involutive_ainfty_signs(square_zero_m3(-1));
    const bool signs = graded.pass() && m3.pass() && graded.get("involution_sign_2").ok && m3.get("involution_sign_3").ok;
    info(std::string("matrix transpose ") + (transpose ? "ok" : "fails") + ", Z3 " + (z3 ? "ok" : "fails") +
         ", identity involution " + (rejected ? "rejected" : "accepted") + ", A-infinity signs " +
         (signs ? "ok" : "fail"));
    criterion(9, "algebra checkers", transpose && z3 && rejected && signs);
  }

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria pass") << std::endl;
  return failures ? 1 : 0;
}
