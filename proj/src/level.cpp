#include "admset/level.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace admset {

LevelStructure make_level(const GroupContext& ctx, std::vector<int> indices) {
  if (indices.empty()) throw std::invalid_argument("make_level: level set must be nonempty");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  const int hi = ctx.kind == GroupKind::GL ? ctx.dim - 1 : ctx.half();
  for (int i : indices)
    if (i < 0 || i > hi)
      throw std::invalid_argument("make_level: index " + std::to_string(i) + " out of range 0.." +
                                  std::to_string(hi));
  return {std::move(indices)};
}

LevelStructure iwahori_level(const GroupContext& ctx) {
  const int hi = ctx.kind == GroupKind::GL ? ctx.dim - 1 : ctx.half();
  std::vector<int> all(static_cast<std::size_t>(hi + 1));
  std::iota(all.begin(), all.end(), 0);
  return {std::move(all)};
}

std::vector<int> residue_reps(const GroupContext& ctx, const LevelStructure& I) {
  const int period = ctx.period();
  std::vector<int> reps;
  for (int i : I.indices) {
    reps.push_back(((i % period) + period) % period);
    if (ctx.kind != GroupKind::GL) reps.push_back(((period - i) % period + period) % period);
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

LevelStructure gl_pm_level(const GroupContext& gl_ctx, const LevelStructure& I) {
  if (gl_ctx.kind != GroupKind::GL)
    throw std::invalid_argument("gl_pm_level: expected a GL context");
  const int period = gl_ctx.dim;
  std::vector<int> res;
  for (int i : I.indices) {
    res.push_back(i % period);
    res.push_back((period - i) % period);
  }
  return make_level(gl_ctx, std::move(res));
}

Vec omega_vec(const GroupContext& ctx, long long i) {
  const int period = ctx.period();
  long long b = i >= 0 ? i / period : -((-i + period - 1) / period);
  long long c = i - b * period;  // 0 <= c < period
  Vec v(static_cast<std::size_t>(ctx.dim), 0);
  for (long long j = 0; j < c; ++j) v[static_cast<std::size_t>(j)] = -1;
  for (auto& x : v) x -= b;
  return v;
}

RatVec eta_vec(const GroupContext& ctx, int i) {
  if (ctx.kind == GroupKind::GL)
    throw std::invalid_argument("eta_vec: defined for GSp/GU contexts");
  if (i < 0 || i > ctx.half()) throw std::invalid_argument("eta_vec: index out of range");
  Vec num = omega_vec(ctx, i);
  const Vec other = omega_vec(ctx, -static_cast<long long>(i));
  for (std::size_t j = 0; j < num.size(); ++j) num[j] += other[j];
  return {std::move(num), 2};
}

Vec minuscule_mu(const GroupContext& ctx, int s) {
  if (ctx.kind == GroupKind::GL)
    throw std::invalid_argument("minuscule_mu: defined for GSp/GU contexts");
  if (s < 0 || s > ctx.half())
    throw std::invalid_argument("minuscule_mu: need 0 <= s <= m");
  Vec mu(static_cast<std::size_t>(ctx.dim), 1);
  for (int j = 0; j < s; ++j) {
    mu[static_cast<std::size_t>(j)] = 2;
    mu[static_cast<std::size_t>(ctx.dim - 1 - j)] = 0;
  }
  return mu;
}

}  // namespace admset
