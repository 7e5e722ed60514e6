#pragma once

#include <vector>

#include "admset/bruhat.hpp"
#include "admset/context.hpp"
#include "admset/element.hpp"
#include "admset/faces.hpp"
#include "admset/level.hpp"

namespace admset {

/// Weakly decreasing lattice cocharacter.
struct DominantCochar {
  GroupContext ctx;
  Vec entries;
};

DominantCochar make_dominant(const GroupContext& ctx, Vec entries);

/// Prefix and suffix partial sums of a dominant cocharacter; the inequality
/// data of the orbit hull.
struct HullDescriptor {
  DominantCochar mu;
  Vec prefix;  // n_1, n_1+n_2, ...
  Vec suffix;  // n_N, n_{N-1}+n_N, ...
};

HullDescriptor hull_descriptor(const DominantCochar& mu);

/// x in Conv(S_N mu): the sum of the i largest coordinates of x is at most
/// prefix_i for every i, with equality at i = N.
bool conv_hull_member_gl(const DominantCochar& mu, const RatVec& x);
/// Same via the suffix lower bounds; equals the prefix form.
bool conv_hull_member_gl_suffix(const DominantCochar& mu, const RatVec& x);

/// x in Conv(S_{2m}^* mu) = Conv(S_{2m} mu) /\ V: requires x on the
/// apartment, c(x) = c(mu), and the pairwise-unpaired top-i sums bounded by
/// prefix_i for i <= m.
bool conv_hull_member_gsp(const DominantCochar& mu, const RatVec& x);
bool conv_hull_member_gsp_suffix(const DominantCochar& mu, const RatVec& x);

/// Bounds P1 (0 <= mu_i <= 2) and sum P2 (Sigma mu_i = dim... n for GU, 2m
/// for GSp) at every representative index.
bool is_naively_permissible(const WeylElement& w, const LevelStructure& I);

/// Naive plus the zero-count bound P3: #{j : mu_i(j) = 0} <= s.
bool is_wedge_permissible(const WeylElement& w, const LevelStructure& I, int s);

/// Kottwitz-Rapoport permissibility: matching invariant and
/// w.a - a in Conv(W mu) at the level's alcove vertices (eta_i for GSp/GU,
/// omega_i representatives for GL).
bool is_mu_permissible(const WeylElement& w, const DominantCochar& mu, const LevelStructure& I);

/// Below some t_{sigma mu} W_{G,I} in the Bruhat order on W~/W_{G,I}.
/// GU elements are decided inside GSp through the index-2 embedding.
bool is_mu_admissible(const WeylElement& w, const Vec& mu, const LevelStructure& I,
                      BruhatCache* cache = nullptr);

/// Canonicalized coset sets: minimal-length representatives sorted by
/// (length, canonical text).
using CosetSet = std::vector<WeylElement>;

CosetSet canonicalize(std::vector<WeylElement> reps);
bool coset_set_equal(const CosetSet& a, const CosetSet& b);

/// Downward closure of {t_{sigma mu}} projected to minimal-length coset
/// representatives mod W_{G,I}.
CosetSet enumerate_admissible(const GroupContext& ctx, const Vec& mu, const LevelStructure& I,
                              BruhatCache* cache = nullptr);

CosetSet enumerate_naive(const GroupContext& ctx, const LevelStructure& I);
CosetSet enumerate_wedge(const GroupContext& ctx, const LevelStructure& I, int s);
CosetSet enumerate_perm_kr(const GroupContext& ctx, const Vec& mu, const LevelStructure& I);

/// Projection of a single-coset set to double-coset minimal representatives.
CosetSet to_double_cosets(const CosetSet& single, const LevelStructure& I);

/// All cosets of W~/W_{G,I} whose representatives fit in the translation box
/// |lambda_j - mu-range| <= slack used by the enumerations; the candidate
/// universe for direct membership filters.
CosetSet coset_universe(const GroupContext& ctx, const Vec& mu, const LevelStructure& I,
                        long long slack = 1);

}  // namespace admset
