#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "admset/bruhat.hpp"
#include "admset/context.hpp"
#include "admset/level.hpp"
#include "admset/permissibility.hpp"

namespace admset {

/// Outcome of one machine check of a set identity or per-element law.
struct VerificationReport {
  std::string claim;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> lhs_set;  // canonical element texts (or check labels)
  std::vector<std::string> rhs_set;
  bool pass = false;
  std::string counterexample;  // first failure in canonical order; empty on PASS
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
};

/// wedge = spin = admissible for the minuscule-type mu with parameter s, in
/// W~/W_{G,I} and in W_{G,I}\W~/W_{G,I}, for GU(m).
VerificationReport verify_equivalence_gu(int m, int s, const std::vector<int>& I,
                                         BruhatCache* cache = nullptr);

/// Adm_GSp,I(mu) = Adm_GL,+-I(mu) /\ W~/W_I = Perm_GL,+-I(mu) /\ W~/W_I,
/// single and double cosets.
VerificationReport verify_adm_perm_intersect(int m, const Vec& mu, const std::vector<int>& I,
                                             BruhatCache* gsp_cache = nullptr,
                                             BruhatCache* gl_cache = nullptr);

/// Adm = Perm (Kottwitz-Rapoport) in GSp for the minuscule-type mu.
VerificationReport verify_perm_eq_adm(int m, int s, const std::vector<int>& I,
                                      BruhatCache* cache = nullptr);

/// For theta-stable wall sets J, J' of GL(2m) and every element of length
/// <= max_len (invariants 0 and m) whose double coset meets the embedded
/// W~_GSp: the minimal-length representative lies in the embedded subgroup.
VerificationReport verify_steinberg_lemma(int m, const std::vector<int>& J,
                                          const std::vector<int>& J_prime, int max_len = 6);

/// Bundle of per-element laws: face conditions and two-band inequalities on
/// random faces, middle-entry rule, self-duality, hull form agreements, and
/// the exhaustive sign relations.  Set corrupt to exercise the FAIL path.
VerificationReport verify_basic_lemmas(int m, std::uint64_t seed, int samples = 200,
                                       bool corrupt = false);

/// theta-stable wall subsets of GL(2m) (proper, possibly empty), as sorted
/// index lists.
std::vector<std::vector<int>> theta_stable_wall_sets(int m);

std::string report_table(const std::vector<VerificationReport>& reports);

/// Seeded dominant cocharacter draws with entries in [0, band].
Vec random_dominant_mu(const GroupContext& ctx, std::uint64_t seed, int band = 3);

}  // namespace admset
