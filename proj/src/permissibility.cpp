#include "admset/permissibility.hpp"

#include <algorithm>
#include <numeric>

namespace admset {

namespace {

long long sum(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0LL); }

DominantCochar drop_middle(const DominantCochar& mu) {
  Vec out;
  const int mid = mu.ctx.middle();
  for (int j = 1; j <= mu.ctx.dim; ++j)
    if (j != mid) out.push_back(mu.entries[j - 1]);
  return make_dominant(GroupContext::gsp(mu.ctx.half()), std::move(out));
}

Vec drop_middle_vec(const GroupContext& gu, const Vec& mu) {
  Vec out;
  for (int j = 1; j <= gu.dim; ++j)
    if (j != gu.middle()) out.push_back(mu[j - 1]);
  return out;
}

/// Iterate assignments slot[t] in [lo, hi]; calls f for each.
template <typename F>
void odometer(int slots, long long lo, long long hi, F&& f) {
  if (slots == 0) {
    f(Vec{});
    return;
  }
  Vec cur(static_cast<std::size_t>(slots), lo);
  while (true) {
    f(cur);
    int t = 0;
    while (t < slots && cur[t] == hi) {
      cur[t] = lo;
      ++t;
    }
    if (t == slots) break;
    ++cur[t];
  }
}

/// Translation parts compatible with the box bound and the given invariant,
/// within the context's lattice.
std::vector<Vec> lattice_box(const GroupContext& ctx, long long lo, long long hi,
                             long long invariant) {
  std::vector<Vec> out;
  const int n = ctx.dim;
  switch (ctx.kind) {
    case GroupKind::GL: {
      odometer(n - 1, lo, hi, [&](const Vec& head) {
        const long long last = invariant - sum(head);
        if (last < lo || last > hi) return;
        Vec v = head;
        v.push_back(last);
        out.push_back(std::move(v));
      });
      break;
    }
    case GroupKind::GSp: {
      const int m = ctx.half();
      odometer(m, lo, hi, [&](const Vec& head) {
        Vec v(static_cast<std::size_t>(n));
        for (int j = 0; j < m; ++j) {
          const long long back = invariant - head[j];
          if (back < lo || back > hi) return;
          v[j] = head[j];
          v[n - 1 - j] = back;
        }
        out.push_back(std::move(v));
      });
      break;
    }
    case GroupKind::GU: {
      if (invariant % 2 != 0) return out;  // pair sums are 2*middle
      const int m = ctx.half();
      const long long mid = invariant / 2;
      if (mid < lo || mid > hi) return out;
      odometer(m, lo, hi, [&](const Vec& head) {
        Vec v(static_cast<std::size_t>(n));
        v[m] = mid;
        for (int j = 0; j < m; ++j) {
          const long long back = invariant - head[j];
          if (back < lo || back > hi) return;
          v[j] = head[j];
          v[n - 1 - j] = back;
        }
        out.push_back(std::move(v));
      });
      break;
    }
  }
  return out;
}

template <typename Pred>
CosetSet enumerate_filtered_cosets(const GroupContext& ctx, long long lo, long long hi,
                                   long long invariant, const LevelStructure& I, Pred&& pred) {
  const ParahoricSubgroup P = parahoric(ctx, I);
  const ParahoricSubgroup triv = trivial_parahoric(ctx);
  const auto perms = finite_weyl_elements(ctx);
  const auto boxes = lattice_box(ctx, lo, hi, invariant);
  ElementSet reps;
  for (const auto& p : perms)
    for (const auto& lam : boxes) {
      WeylElement w = make_element(ctx, p, lam);
      if (!pred(w)) continue;
      reps.insert(min_length_rep(w, triv, P));
    }
  return canonicalize({reps.begin(), reps.end()});
}

}  // namespace

DominantCochar make_dominant(const GroupContext& ctx, Vec entries) {
  if (!in_translation_lattice(ctx, entries))
    throw std::invalid_argument("make_dominant: vector outside the translation lattice");
  for (std::size_t j = 0; j + 1 < entries.size(); ++j)
    if (entries[j] < entries[j + 1])
      throw std::invalid_argument("make_dominant: entries must be weakly decreasing");
  return {ctx, std::move(entries)};
}

HullDescriptor hull_descriptor(const DominantCochar& mu) {
  HullDescriptor h{mu, {}, {}};
  long long acc = 0;
  for (long long v : mu.entries) h.prefix.push_back(acc += v);
  acc = 0;
  for (auto it = mu.entries.rbegin(); it != mu.entries.rend(); ++it)
    h.suffix.push_back(acc += *it);
  return h;
}

bool conv_hull_member_gl(const DominantCochar& mu, const RatVec& x) {
  const int n = mu.ctx.dim;
  if (static_cast<int>(x.num.size()) != n)
    throw std::invalid_argument("conv_hull_member_gl: dimension mismatch");
  const HullDescriptor h = hull_descriptor(mu);
  Vec sorted = x.num;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  long long acc = 0;
  for (int i = 1; i <= n; ++i) {
    acc += sorted[i - 1];
    if (acc > h.prefix[i - 1] * x.den) return false;
  }
  return acc == h.prefix[n - 1] * x.den;
}

bool conv_hull_member_gl_suffix(const DominantCochar& mu, const RatVec& x) {
  const int n = mu.ctx.dim;
  if (static_cast<int>(x.num.size()) != n)
    throw std::invalid_argument("conv_hull_member_gl_suffix: dimension mismatch");
  const HullDescriptor h = hull_descriptor(mu);
  Vec sorted = x.num;
  std::sort(sorted.begin(), sorted.end());
  long long acc = 0;
  for (int i = 1; i <= n; ++i) {
    acc += sorted[i - 1];
    if (acc < h.suffix[i - 1] * x.den) return false;
  }
  return acc == h.suffix[n - 1] * x.den;
}

bool conv_hull_member_gsp(const DominantCochar& mu, const RatVec& x) {
  if (mu.ctx.kind != GroupKind::GSp)
    throw std::invalid_argument("conv_hull_member_gsp: expected a GSp cocharacter");
  const int n = mu.ctx.dim;
  const int m = mu.ctx.half();
  if (static_cast<int>(x.num.size()) != n)
    throw std::invalid_argument("conv_hull_member_gsp: dimension mismatch");
  if (!on_apartment(mu.ctx, x)) return false;
  const long long c_mu = mu.entries.front() + mu.entries.back();
  if (x.num.front() + x.num.back() != c_mu * x.den) return false;
  const HullDescriptor h = hull_descriptor(mu);
  // top-i sums over coordinate sets containing no mirrored pair
  Vec pair_max(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) pair_max[j] = std::max(x.num[j], x.num[n - 1 - j]);
  std::sort(pair_max.begin(), pair_max.end(), std::greater<>());
  long long acc = 0;
  for (int i = 1; i <= m; ++i) {
    acc += pair_max[i - 1];
    if (acc > h.prefix[i - 1] * x.den) return false;
  }
  return true;
}

bool conv_hull_member_gsp_suffix(const DominantCochar& mu, const RatVec& x) {
  if (mu.ctx.kind != GroupKind::GSp)
    throw std::invalid_argument("conv_hull_member_gsp_suffix: expected a GSp cocharacter");
  const int n = mu.ctx.dim;
  const int m = mu.ctx.half();
  if (static_cast<int>(x.num.size()) != n)
    throw std::invalid_argument("conv_hull_member_gsp_suffix: dimension mismatch");
  if (!on_apartment(mu.ctx, x)) return false;
  const long long c_mu = mu.entries.front() + mu.entries.back();
  if (x.num.front() + x.num.back() != c_mu * x.den) return false;
  const HullDescriptor h = hull_descriptor(mu);
  Vec pair_min(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) pair_min[j] = std::min(x.num[j], x.num[n - 1 - j]);
  std::sort(pair_min.begin(), pair_min.end());
  long long acc = 0;
  for (int i = 1; i <= m; ++i) {
    acc += pair_min[i - 1];
    if (acc < h.suffix[i - 1] * x.den) return false;
  }
  return true;
}

bool is_naively_permissible(const WeylElement& w, const LevelStructure& I) {
  if (w.ctx.kind == GroupKind::GL)
    throw std::invalid_argument("is_naively_permissible: defined for GSp/GU contexts");
  const MuFamily m = mu_family(face_of(w, I));
  for (const auto& mu : m.mu) {
    long long total = 0;
    for (long long v : mu) {
      if (v < 0 || v > 2) return false;  // P1
      total += v;
    }
    if (total != w.ctx.dim) return false;  // P2
  }
  return true;
}

bool is_wedge_permissible(const WeylElement& w, const LevelStructure& I, int s) {
  if (s < 0 || s > w.ctx.half())
    throw std::invalid_argument("is_wedge_permissible: need 0 <= s <= m");
  if (!is_naively_permissible(w, I)) return false;
  const MuFamily m = mu_family(face_of(w, I));
  for (const auto& mu : m.mu) {
    int zeros = 0;
    for (long long v : mu) zeros += v == 0;
    if (zeros > s) return false;  // P3
  }
  return true;
}

bool is_mu_permissible(const WeylElement& w, const DominantCochar& mu, const LevelStructure& I) {
  if (w.ctx != mu.ctx) throw std::invalid_argument("is_mu_permissible: context mismatch");
  switch (w.ctx.kind) {
    case GroupKind::GU:
      return is_mu_permissible(embed_gu_to_gsp(w), drop_middle(mu), I);
    case GroupKind::GSp: {
      if (kottwitz_invariant(w) != mu.entries.front() + mu.entries.back()) return false;
      for (int i : I.indices) {
        const RatVec a = eta_vec(w.ctx, i);
        RatVec x = affine_action(w, a);
        for (std::size_t j = 0; j < x.num.size(); ++j) x.num[j] -= a.num[j];
        if (!conv_hull_member_gsp(mu, x)) return false;
      }
      return true;
    }
    case GroupKind::GL: {
      if (kottwitz_invariant(w) != sum(mu.entries)) return false;
      for (int r : I.indices) {
        const Vec a = omega_vec(w.ctx, r);
        Vec x = affine_action(w, a);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] -= a[j];
        if (!conv_hull_member_gl(mu, RatVec::integral(x))) return false;
      }
      return true;
    }
  }
  return false;
}

bool is_mu_admissible(const WeylElement& w, const Vec& mu, const LevelStructure& I,
                      BruhatCache* cache) {
  if (w.ctx.kind == GroupKind::GU)
    return is_mu_admissible(embed_gu_to_gsp(w), drop_middle_vec(w.ctx, mu), I, cache);
  const WeylElement t_mu = translation(w.ctx, mu);
  if (kottwitz_invariant(w) != kottwitz_invariant(t_mu)) return false;
  const ParahoricSubgroup P = parahoric(w.ctx, I);
  const ParahoricSubgroup triv = trivial_parahoric(w.ctx);
  const WeylElement w0 = min_length_rep(w, triv, P);
  for (const Vec& v : weyl_orbit(w.ctx, mu)) {
    const WeylElement t0 = min_length_rep(translation(w.ctx, v), triv, P);
    if (bruhat_leq(w0, t0, cache)) return true;
  }
  return false;
}

CosetSet canonicalize(std::vector<WeylElement> reps) {
  std::sort(reps.begin(), reps.end(), [](const WeylElement& a, const WeylElement& b) {
    const int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return canonical_text(a) < canonical_text(b);
  });
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

bool coset_set_equal(const CosetSet& a, const CosetSet& b) { return a == b; }

CosetSet enumerate_admissible(const GroupContext& ctx, const Vec& mu, const LevelStructure& I,
                              BruhatCache* cache) {
  if (ctx.kind == GroupKind::GU) {
    const CosetSet gsp = enumerate_admissible(GroupContext::gsp(ctx.half()),
                                              drop_middle_vec(ctx, mu), I, cache);
    std::vector<WeylElement> lifted;
    lifted.reserve(gsp.size());
    for (const auto& w : gsp) lifted.push_back(lift_gsp_to_gu(w));
    return canonicalize(std::move(lifted));
  }
  std::vector<WeylElement> seeds;
  for (const Vec& v : weyl_orbit(ctx, mu)) seeds.push_back(translation(ctx, v));
  const ElementSet closure = downward_closure(seeds, cache);
  const ParahoricSubgroup P = parahoric(ctx, I);
  const ParahoricSubgroup triv = trivial_parahoric(ctx);
  ElementSet reps;
  for (const auto& w : closure) reps.insert(min_length_rep(w, triv, P));
  return canonicalize({reps.begin(), reps.end()});
}

CosetSet enumerate_naive(const GroupContext& ctx, const LevelStructure& I) {
  if (ctx.kind == GroupKind::GL)
    throw std::invalid_argument("enumerate_naive: defined for GSp/GU contexts");
  return enumerate_filtered_cosets(ctx, -1, 3, 2, I, [&](const WeylElement& w) {
    return is_naively_permissible(w, I);
  });
}

CosetSet enumerate_wedge(const GroupContext& ctx, const LevelStructure& I, int s) {
  if (ctx.kind == GroupKind::GL)
    throw std::invalid_argument("enumerate_wedge: defined for GSp/GU contexts");
  return enumerate_filtered_cosets(ctx, -1, 3, 2, I, [&](const WeylElement& w) {
    return is_wedge_permissible(w, I, s);
  });
}

CosetSet enumerate_perm_kr(const GroupContext& ctx, const Vec& mu, const LevelStructure& I) {
  if (ctx.kind == GroupKind::GU) {
    const CosetSet gsp =
        enumerate_perm_kr(GroupContext::gsp(ctx.half()), drop_middle_vec(ctx, mu), I);
    std::vector<WeylElement> lifted;
    for (const auto& w : gsp) lifted.push_back(lift_gsp_to_gu(w));
    return canonicalize(std::move(lifted));
  }
  const DominantCochar dom = make_dominant(ctx, mu);
  const long long lo = *std::min_element(mu.begin(), mu.end()) - 1;
  const long long hi = *std::max_element(mu.begin(), mu.end()) + 1;
  const long long inv =
      ctx.kind == GroupKind::GL ? sum(mu) : mu.front() + mu.back();
  return enumerate_filtered_cosets(ctx, lo, hi, inv, I, [&](const WeylElement& w) {
    return is_mu_permissible(w, dom, I);
  });
}

CosetSet to_double_cosets(const CosetSet& single, const LevelStructure& I) {
  if (single.empty()) return {};
  const ParahoricSubgroup P = parahoric(single.front().ctx, I);
  ElementSet reps;
  for (const auto& w : single) reps.insert(min_length_rep(w, P, P));
  return canonicalize({reps.begin(), reps.end()});
}

CosetSet coset_universe(const GroupContext& ctx, const Vec& mu, const LevelStructure& I,
                        long long slack) {
  const long long lo = *std::min_element(mu.begin(), mu.end()) - slack;
  const long long hi = *std::max_element(mu.begin(), mu.end()) + slack;
  long long inv = 0;  // lattice_box wants the pair sum for GSp/GU, the total for GL
  switch (ctx.kind) {
    case GroupKind::GL: inv = sum(mu); break;
    case GroupKind::GSp: inv = mu.front() + mu.back(); break;
    case GroupKind::GU: inv = 2 * mu[ctx.middle() - 1]; break;
  }
  return enumerate_filtered_cosets(ctx, lo, hi, inv, I, [](const WeylElement&) { return true; });
}

}  // namespace admset
