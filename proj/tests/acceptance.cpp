// Acceptance suite: runs every release criterion at its full stated range
// and prints one PASS/FAIL line per criterion.  Exit status is the number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "admset/cli.hpp"
#include "admset/faces.hpp"
#include "admset/harness.hpp"
#include "admset/io.hpp"
#include "admset/permissibility.hpp"
#include "admset/spin.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace admset;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int number, const std::string& what, bool pass, Clock::time_point t0,
            const std::string& detail = "") {
  const double sec =
      std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL", number, what.c_str(),
              sec, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

BruhatCache gsp_cache, gl_cache;

// 1. wedge = spin = admissible, single and double cosets, m <= 3
void criterion_equivalence() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  long long total_cosets = 0;
  for (int m = 1; m <= 3 && pass; ++m)
    for (int s = 0; s <= m && pass; ++s)
      for (const auto& I : testutil::nonempty_subsets_upto(m)) {
        const VerificationReport r = verify_equivalence_gu(m, s, I, &gsp_cache);
        total_cosets += static_cast<long long>(r.lhs_set.size());
        if (!r.pass) {
          pass = false;
          detail = "m=" + std::to_string(m) + " s=" + std::to_string(s) + ": " + r.counterexample;
          break;
        }
      }
  report(1, "wedge = spin = admissible on both quotients, m in {1,2,3}", pass, t0,
         pass ? "union of cardinalities " + std::to_string(total_cosets) : detail);
}

// 2. every naively permissible coset yields satisfied witnesses with the
//    self-dual diagnostics, m <= 3
void criterion_spin_automaticity() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  long long witnesses = 0;
  for (int m = 1; m <= 3 && pass; ++m) {
    const GroupContext gu = GroupContext::gu(m);
    for (const auto& I_set : testutil::nonempty_subsets_upto(m)) {
      const LevelStructure I = make_level(gu, I_set);
      for (const auto& w : enumerate_naive(gu, I)) {
        const MuFamily fam = mu_family(face_of(w, I));
        for (const SpinWitness& sw : coset_spin_witnesses(w, I)) {
          ++witnesses;
          bool ok = sw.satisfied && sw.q >= sw.q_perp;
          if (sw.kase == SpinCase::SelfDual) {
            ok = ok && sw.E_minus == sw.E_perp_minus && sw.E_plus == sw.E_perp_plus &&
                 sw.sgn_plus == -sw.sgn_minus &&
                 is_self_dual(fam.at_rep(static_cast<int>(sw.i)), 2);
          }
          if (!ok) {
            pass = false;
            detail = "m=" + std::to_string(m) + " w=" + canonical_text(w) +
                     " rep=" + std::to_string(sw.i);
            break;
          }
        }
        if (!pass) break;
      }
      if (!pass) break;
    }
  }
  report(2, "spin witnesses satisfied on every naively permissible coset, m <= 3", pass, t0,
         pass ? std::to_string(witnesses) + " witnesses" : detail);
}

// 3. Adm_GSp = Adm_GL /\ = Perm_GL /\, m in {1,2}, 20 seeded cocharacters
void criterion_intersections() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  for (int m = 1; m <= 2 && pass; ++m)
    for (int k = 0; k < 20 && pass; ++k) {
      const Vec mu = random_dominant_mu(GroupContext::gsp(m), 1 + k, 3);
      for (const auto& I : testutil::nonempty_subsets_upto(m)) {
        const VerificationReport r = verify_adm_perm_intersect(m, mu, I, &gsp_cache, &gl_cache);
        if (!r.pass) {
          pass = false;
          detail = "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + r.counterexample;
          break;
        }
      }
    }
  report(3, "admissible/permissible intersection identities, m in {1,2}, 20 seeded mu", pass, t0,
         detail);
}

// 4. Adm = Perm(KR) for the two-one-zero cocharacters, m <= 3
void criterion_perm_eq_adm() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  for (int m = 1; m <= 3 && pass; ++m)
    for (int s = 0; s <= m && pass; ++s)
      for (const auto& I : testutil::nonempty_subsets_upto(m)) {
        const VerificationReport r = verify_perm_eq_adm(m, s, I, &gsp_cache);
        if (!r.pass) {
          pass = false;
          detail = "m=" + std::to_string(m) + " s=" + std::to_string(s) + ": " + r.counterexample;
          break;
        }
      }
  report(4, "admissible equals vertexwise-permissible in GSp, m <= 3, all s, all I", pass, t0,
         detail);
}

// 5. Adm(mu) subset of Perm(mu) in GL, GSp, GU for the seeded battery
void criterion_containment() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  long long checked = 0;
  for (int m = 1; m <= 2 && pass; ++m) {
    const GroupContext gsp = GroupContext::gsp(m);
    const GroupContext gl = GroupContext::gl(2 * m);
    const GroupContext gu = GroupContext::gu(m);
    for (int k = 0; k < 20 && pass; ++k) {
      const Vec mu_sp = random_dominant_mu(gsp, 1 + k, 3);
      const Vec mu_gl = random_dominant_mu(gl, 101 + k, 3);
      const Vec mu_gu = random_dominant_mu(gu, 201 + k, 3);
      for (const auto& I_set : testutil::nonempty_subsets_upto(m)) {
        const LevelStructure I = make_level(gsp, I_set);
        const LevelStructure I_gl = gl_pm_level(gl, I);
        auto contain = [&](const GroupContext& ctx, const Vec& mu, const LevelStructure& lvl,
                           BruhatCache* cache) {
          const DominantCochar dom = make_dominant(ctx, mu);
          for (const auto& w : enumerate_admissible(ctx, mu, lvl, cache)) {
            ++checked;
            if (!is_mu_permissible(w, dom, lvl)) {
              pass = false;
              detail = to_string(ctx.kind) + " " + canonical_text(w);
              return;
            }
          }
        };
        contain(gsp, mu_sp, I, &gsp_cache);
        if (pass) contain(gl, mu_gl, I_gl, &gl_cache);
        if (pass) contain(gu, mu_gu, I, &gsp_cache);
        if (!pass) break;
      }
    }
  }
  report(5, "admissible sets contained in permissible sets (GL, GSp, GU)", pass, t0,
         pass ? std::to_string(checked) + " memberships" : detail);
}

// 6. minimal double-coset representatives stay in the embedded subgroup
void criterion_steinberg() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  for (int m = 1; m <= 2 && pass; ++m)
    for (const auto& J : theta_stable_wall_sets(m)) {
      for (const auto& Jp : theta_stable_wall_sets(m)) {
        const VerificationReport r = verify_steinberg_lemma(m, J, Jp, 6);
        if (!r.pass) {
          pass = false;
          detail = "m=" + std::to_string(m) + ": " + r.counterexample;
          break;
        }
      }
      if (!pass) break;
    }
  report(6, "fixed-point minimal representatives, m in {1,2}, length <= 6", pass, t0, detail);
}

// 7. exhaustive sign identities for n in {3,5}
void criterion_signs() {
  const auto t0 = Clock::now();
  bool pass = true;
  long long subsets = 0;
  for (int n : {3, 5}) {
    const int m = (n - 1) / 2;
    const int factor = (m + 1) % 2 == 0 ? 1 : -1;
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) e[v] = v + 1;
    while (pass) {
      ++subsets;
      if (sigma_sign(e, 2 * n) != sigma_sign(perp_set(e, 2 * n), 2 * n)) pass = false;
      if (sigma_prime_sign(e, 2 * n) != factor * sigma_sign(e, 2 * n)) pass = false;
      int t = n - 1;
      while (t >= 0 && e[t] == 2 * n - (n - 1 - t)) --t;
      if (t < 0) break;
      ++e[t];
      for (int u = t + 1; u < n; ++u) e[u] = e[u - 1] + 1;
    }
    if (!pass) break;
  }
  report(7, "sign identities over all half-size subsets, n in {3,5}", pass, t0,
         std::to_string(subsets) + " subsets");
}

// 8. frozen sanity cardinalities, cross-checked against the subword oracle
void criterion_cardinalities() {
  const auto t0 = Clock::now();
  const GroupContext gl2 = GroupContext::gl(2);
  const GroupContext gu1 = GroupContext::gu(1);
  const LevelStructure iw2 = iwahori_level(gl2);
  const LevelStructure iw_gu = make_level(gu1, {0, 1});
  bool pass = true;
  pass &= enumerate_admissible(gl2, {1, 0}, iw2, &gl_cache).size() == 3;
  pass &= enumerate_admissible(gl2, {2, 0}, iw2, &gl_cache).size() == 5;
  pass &= enumerate_admissible(gl2, {1, 1}, iw2, &gl_cache).size() == 1;
  pass &= enumerate_wedge(gu1, iw_gu, 1).size() == 5;
  pass &= enumerate_wedge(gu1, iw_gu, 0).size() == 1;
  // the same counts from the independent oracle
  pass &= oracle::closure({translation(gl2, {1, 0}), translation(gl2, {0, 1})}).size() == 3;
  pass &= oracle::closure({translation(gl2, {2, 0}), translation(gl2, {0, 2})}).size() == 5;
  pass &= oracle::closure({translation(gl2, {1, 1})}).size() == 1;
  report(8, "sanity cardinalities 3/5/1 and 5/1 against the oracle", pass, t0);
}

// 9. order comparisons match the subword oracle; orders inherit through the
//    embeddings exhaustively at length <= 4
void criterion_oracle_equivalence() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  std::mt19937_64 rng(2024);
  long long compared = 0;
  for (const GroupContext ctx : {GroupContext::gsp(1), GroupContext::gsp(2)}) {
    for (int t = 0; t < 100; ++t) {
      const WeylElement a = testutil::random_element(ctx, rng, 1);
      const WeylElement b = testutil::random_element(ctx, rng, 1);
      if (length(b) > 12) continue;
      ++compared;
      if (bruhat_leq(a, b, &gsp_cache) != oracle::leq(a, b)) {
        pass = false;
        detail = "pair " + canonical_text(a) + " vs " + canonical_text(b);
        break;
      }
    }
    if (!pass) break;
  }
  // exhaustive inheritance at length <= 4 through GU -> GSp -> GL
  for (int m = 1; m <= 2 && pass; ++m) {
    const GroupContext gsp = GroupContext::gsp(m);
    std::vector<WeylElement> shorties;
    for (const auto& p : finite_weyl_elements(gsp)) {
      std::vector<Vec> boxes;
      for (long long c = 0; c <= 2; ++c) {
        std::vector<Vec> head;
        // small translation box per component
        std::function<void(Vec)> rec = [&](Vec acc) {
          if (static_cast<int>(acc.size()) == m) {
            Vec lam(static_cast<std::size_t>(2 * m));
            for (int j = 0; j < m; ++j) {
              lam[j] = acc[j];
              lam[2 * m - 1 - j] = c - acc[j];
            }
            boxes.push_back(lam);
            return;
          }
          for (long long v = -2; v <= 2; ++v) {
            Vec nxt = acc;
            nxt.push_back(v);
            rec(nxt);
          }
        };
        rec({});
      }
      for (const auto& lam : boxes) {
        const WeylElement w = make_element(gsp, p, lam);
        if (length(w) <= 4) shorties.push_back(w);
      }
    }
    for (const auto& a : shorties) {
      for (const auto& b : shorties) {
        ++compared;
        const bool sp = bruhat_leq(a, b, &gsp_cache);
        if (sp != bruhat_leq(embed_gsp_to_gl(a), embed_gsp_to_gl(b), &gl_cache)) {
          pass = false;
          detail = "GSp/GL " + canonical_text(a) + " vs " + canonical_text(b);
          break;
        }
        if (kottwitz_invariant(a) % 2 == 0 && kottwitz_invariant(b) % 2 == 0) {
          if (sp != bruhat_leq(lift_gsp_to_gu(a), lift_gsp_to_gu(b), &gsp_cache)) {
            pass = false;
            detail = "GU/GSp " + canonical_text(a) + " vs " + canonical_text(b);
            break;
          }
        }
      }
      if (!pass) break;
    }
  }
  report(9, "subword-oracle agreement and order inheritance at length <= 4", pass, t0,
         pass ? std::to_string(compared) + " comparisons" : detail);
}

// 10. byte-identical exports for identical seeds
void criterion_determinism() {
  const auto t0 = Clock::now();
  auto run_text = [](cli::RunConfig c) {
    std::ostringstream out, err;
    cli::run(std::move(c), out, err);
    return out.str();
  };
  cli::RunConfig e;
  e.command = cli::Command::Enumerate;
  e.group = "GU";
  e.rank = 2;
  e.s = 1;
  e.I = {0, 2};
  e.set_kind = "adm";
  const bool enum_ok = run_text(e) == run_text(e);

  cli::RunConfig v;
  v.command = cli::Command::Verify;
  v.claim = "basic";
  v.max_m = 2;
  v.seed = 77;
  v.timing = false;
  const bool verify_ok = run_text(v) == run_text(v);
  report(10, "byte-identical exports for identical seeds", enum_ok && verify_ok, t0);
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  criterion_equivalence();
  criterion_spin_automaticity();
  criterion_intersections();
  criterion_perm_eq_adm();
  criterion_containment();
  criterion_steinberg();
  criterion_signs();
  criterion_cardinalities();
  criterion_oracle_equivalence();
  criterion_determinism();
  const double sec = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("%s: %d criterion(s) failed (total %.1fs)\n", failures == 0 ? "OK" : "FAILED",
              failures, sec);
  return failures;
}
