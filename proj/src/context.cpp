#include "admset/context.hpp"

namespace admset {

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return "GL";
    case GroupKind::GSp: return "GSP";
    case GroupKind::GU: return "GU";
  }
  return "?";
}

std::string to_string(const GroupContext& ctx) {
  return to_string(ctx.kind) + "(" + std::to_string(ctx.rank) + ")";
}

bool in_translation_lattice(const GroupContext& ctx, const Vec& x) {
  if (static_cast<int>(x.size()) != ctx.dim) return false;
  switch (ctx.kind) {
    case GroupKind::GL:
      return true;
    case GroupKind::GSp: {
      const int n = ctx.dim;
      const long long c = x[0] + x[n - 1];
      for (int j = 1; j < n / 2; ++j)
        if (x[j] + x[n - 1 - j] != c) return false;
      return true;
    }
    case GroupKind::GU: {
      const int n = ctx.dim;
      const long long c = 2 * x[ctx.middle() - 1];
      for (int j = 0; j < ctx.half(); ++j)
        if (x[j] + x[n - 1 - j] != c) return false;
      return true;
    }
  }
  return false;
}

bool star_symmetric(const GroupContext& ctx, const std::vector<int>& perm) {
  if (ctx.kind == GroupKind::GL) return true;
  const int n = ctx.dim;
  if (static_cast<int>(perm.size()) != n) return false;
  for (int j = 1; j <= n; ++j)
    if (perm[n - j] != n + 1 - perm[j - 1]) return false;
  return true;
}

bool operator==(const RatVec& a, const RatVec& b) {
  if (a.num.size() != b.num.size()) return false;
  // cross-multiplied comparison; denominators stay small here
  for (std::size_t j = 0; j < a.num.size(); ++j)
    if (a.num[j] * b.den != b.num[j] * a.den) return false;
  return true;
}

bool on_apartment(const GroupContext& ctx, const RatVec& x) {
  if (static_cast<int>(x.num.size()) != ctx.dim) return false;
  switch (ctx.kind) {
    case GroupKind::GL:
      return true;
    case GroupKind::GSp: {
      const int n = ctx.dim;
      const long long c = x.num[0] + x.num[n - 1];
      for (int j = 1; j < n / 2; ++j)
        if (x.num[j] + x.num[n - 1 - j] != c) return false;
      return true;
    }
    case GroupKind::GU: {
      const int n = ctx.dim;
      const long long c = 2 * x.num[ctx.middle() - 1];
      for (int j = 0; j < ctx.half(); ++j)
        if (x.num[j] + x.num[n - 1 - j] != c) return false;
      return true;
    }
  }
  return false;
}

}  // namespace admset
