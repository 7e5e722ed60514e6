#pragma once

#include <vector>

#include "admset/context.hpp"

namespace admset {

/// Parahoric level: a nonempty sorted subset I of {0,...,m} for GSp/GU,
/// or a nonempty set of residues in {0,...,N-1} for GL (the +-I picture).
struct LevelStructure {
  std::vector<int> indices;  // sorted, unique
};

LevelStructure make_level(const GroupContext& ctx, std::vector<int> indices);

/// Iwahori level {0,...,m} (GSp/GU) or {0,...,N-1} (GL).
LevelStructure iwahori_level(const GroupContext& ctx);

/// Representative residues of the periodic index family in [0, period):
/// (I u (period - I)) mod period, sorted.  For GL the level already is a
/// residue set and is returned as-is.
std::vector<int> residue_reps(const GroupContext& ctx, const LevelStructure& I);

/// GL(2m) level matching +-I for I subset of {0..m}.
LevelStructure gl_pm_level(const GroupContext& gl_ctx, const LevelStructure& I);

/// Standard vertex vector omega_i = ((-1)^(c), 0^(period-c)) - b*1 for
/// i = period*b + c, 0 <= c < period, in ambient coordinates.
Vec omega_vec(const GroupContext& ctx, long long i);

/// eta_i = (omega_i + omega_{-i})/2 for 0 <= i <= m (GSp/GU); the vertex of
/// the base alcove pinned by level index i.
RatVec eta_vec(const GroupContext& ctx, int i);

/// Image of the minuscule-type cocharacter with parameter s:
/// (2^(s), 1^(n-2s), 0^(s)) in the GU lattice, (2^(s), 1^(2m-2s), 0^(s)) for GSp.
Vec minuscule_mu(const GroupContext& ctx, int s);

}  // namespace admset
