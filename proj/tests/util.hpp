#pragma once

// Shared helpers for the test binaries: seeded random group elements and
// small conveniences.

#include <random>
#include <vector>

#include "admset/element.hpp"
#include "admset/level.hpp"

namespace admset::testutil {

/// Random element with translation entries bounded by `box`.
inline WeylElement random_element(const GroupContext& ctx, std::mt19937_64& rng,
                                  long long box = 2) {
  static thread_local std::vector<std::vector<int>> perm_pool;
  static thread_local GroupContext pool_ctx = GroupContext::gl(1);
  if (perm_pool.empty() || !(pool_ctx == ctx)) {
    perm_pool = finite_weyl_elements(ctx);
    pool_ctx = ctx;
  }
  std::uniform_int_distribution<std::size_t> pick(0, perm_pool.size() - 1);
  std::uniform_int_distribution<long long> entry(-box, box);
  Vec lam(static_cast<std::size_t>(ctx.dim));
  switch (ctx.kind) {
    case GroupKind::GL:
      for (auto& x : lam) x = entry(rng);
      break;
    case GroupKind::GSp: {
      const long long c = entry(rng) + entry(rng);
      for (int j = 0; j < ctx.half(); ++j) {
        lam[j] = entry(rng);
        lam[ctx.dim - 1 - j] = c - lam[j];
      }
      break;
    }
    case GroupKind::GU: {
      const long long mid = entry(rng);
      lam[ctx.half()] = mid;
      for (int j = 0; j < ctx.half(); ++j) {
        lam[j] = entry(rng);
        lam[ctx.dim - 1 - j] = 2 * mid - lam[j];
      }
      break;
    }
  }
  return make_element(ctx, perm_pool[pick(rng)], lam);
}

/// Random nonempty level subset of {0..m} (GSp/GU) or residues (GL).
inline LevelStructure random_level(const GroupContext& ctx, std::mt19937_64& rng) {
  const int hi = ctx.kind == GroupKind::GL ? ctx.dim - 1 : ctx.half();
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> I;
  while (I.empty())
    for (int i = 0; i <= hi; ++i)
      if (coin(rng)) I.push_back(i);
  return make_level(ctx, I);
}

inline std::vector<std::vector<int>> nonempty_subsets_upto(int m) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << (m + 1)); ++mask) {
    std::vector<int> I;
    for (int i = 0; i <= m; ++i)
      if (mask & (1 << i)) I.push_back(i);
    out.push_back(std::move(I));
  }
  return out;
}

}  // namespace admset::testutil
