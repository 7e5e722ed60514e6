#include "admset/harness.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <random>
#include <sstream>

#include "admset/faces.hpp"
#include "admset/spin.hpp"

namespace admset {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<std::string> texts_of(const CosetSet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (const auto& w : s) out.push_back(canonical_text(w));
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) os << ",";
    os << v[t];
  }
  return os.str();
}

std::string join_vec(const Vec& v) {
  std::ostringstream os;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) os << ",";
    os << v[t];
  }
  return os.str();
}

/// First element of the symmetric difference, in canonical order.
std::string first_mismatch(const std::string& label, const CosetSet& lhs, const CosetSet& rhs) {
  for (const auto& w : lhs) {
    if (!std::binary_search(rhs.begin(), rhs.end(), w,
                            [](const WeylElement& a, const WeylElement& b) {
                              const int la = length(a), lb = length(b);
                              if (la != lb) return la < lb;
                              return canonical_text(a) < canonical_text(b);
                            }))
      return label + ": only in lhs: " + canonical_text(w);
  }
  for (const auto& w : rhs) {
    if (!std::binary_search(lhs.begin(), lhs.end(), w,
                            [](const WeylElement& a, const WeylElement& b) {
                              const int la = length(a), lb = length(b);
                              if (la != lb) return la < lb;
                              return canonical_text(a) < canonical_text(b);
                            }))
      return label + ": only in rhs: " + canonical_text(w);
  }
  return "";
}

}  // namespace

VerificationReport verify_equivalence_gu(int m, int s, const std::vector<int>& I_in,
                                         BruhatCache* cache) {
  const auto t0 = Clock::now();
  const GroupContext ctx = GroupContext::gu(m);
  const LevelStructure I = make_level(ctx, I_in);
  VerificationReport r;
  r.claim = "adm-iff-wedge-iff-spin";
  r.parameters = {{"group", "GU"},
                  {"m", std::to_string(m)},
                  {"s", std::to_string(s)},
                  {"I", join_ints(I.indices)}};

  const CosetSet wedge = enumerate_wedge(ctx, I, s);
  const CosetSet spin = canonicalize(enumerate_spin(ctx, I, s));
  const CosetSet adm = enumerate_admissible(ctx, minuscule_mu(ctx, s), I, cache);
  r.lhs_set = texts_of(wedge);
  r.rhs_set = texts_of(adm);
  r.pass = true;
  for (const auto& [label, lhs, rhs] :
       {std::make_tuple("wedge-vs-spin", &wedge, &spin),
        std::make_tuple("wedge-vs-adm", &wedge, &adm)}) {
    if (*lhs != *rhs) {
      r.pass = false;
      r.counterexample = first_mismatch(label, *lhs, *rhs);
      break;
    }
  }
  if (r.pass) {
    const CosetSet wedge_d = to_double_cosets(wedge, I);
    const CosetSet spin_d = to_double_cosets(spin, I);
    const CosetSet adm_d = to_double_cosets(adm, I);
    // the double-coset tests are well-posed: membership is constant on
    // double cosets, checked here on every W_{G,I}-translate of each rep
    const ParahoricSubgroup P = parahoric(ctx, I);
    for (const auto& w : wedge_d) {
      for (const auto& u : P.elements) {
        const WeylElement shifted = compose(u, w);
        if (!is_wedge_permissible(shifted, I, s) || !is_spin_permissible(shifted, I, s)) {
          r.pass = false;
          r.counterexample = "double-coset well-definedness: " + canonical_text(shifted);
          break;
        }
      }
      if (!r.pass) break;
    }
    if (r.pass && (wedge_d != spin_d || wedge_d != adm_d)) {
      r.pass = false;
      r.counterexample = first_mismatch("double-cosets", wedge_d, adm_d);
    }
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

namespace {

/// GSp cosets whose image coset in W~_GL/W_{GL,+-I} belongs to gl_set.
CosetSet intersect_with_gsp(const CosetSet& gl_set, const GroupContext& gsp,
                            const ParahoricSubgroup& P_gl, const ParahoricSubgroup& P_gsp) {
  const ParahoricSubgroup triv = trivial_parahoric(gsp);
  std::vector<WeylElement> out;
  for (const auto& rep : gl_set) {
    for (const auto& u : P_gl.elements) {
      const WeylElement member = compose(rep, u);
      if (in_gsp_image(member)) {
        out.push_back(min_length_rep(restrict_gl_to_gsp(member), triv, P_gsp));
        break;
      }
    }
  }
  return canonicalize(std::move(out));
}

}  // namespace

VerificationReport verify_adm_perm_intersect(int m, const Vec& mu, const std::vector<int>& I_in,
                                             BruhatCache* gsp_cache, BruhatCache* gl_cache) {
  const auto t0 = Clock::now();
  const GroupContext gsp = GroupContext::gsp(m);
  const GroupContext gl = GroupContext::gl(2 * m);
  const LevelStructure I = make_level(gsp, I_in);
  const LevelStructure I_gl = gl_pm_level(gl, I);
  VerificationReport r;
  r.claim = "adm-gsp-eq-gl-intersections";
  r.parameters = {{"m", std::to_string(m)}, {"mu", join_vec(mu)}, {"I", join_ints(I.indices)}};

  const CosetSet adm_gsp = enumerate_admissible(gsp, mu, I, gsp_cache);
  const CosetSet adm_gl = enumerate_admissible(gl, mu, I_gl, gl_cache);
  const CosetSet perm_gl = enumerate_perm_kr(gl, mu, I_gl);

  const ParahoricSubgroup P_gl = parahoric(gl, I_gl);
  const ParahoricSubgroup P_gsp = parahoric(gsp, I);
  const CosetSet adm_cap = intersect_with_gsp(adm_gl, gsp, P_gl, P_gsp);
  const CosetSet perm_cap = intersect_with_gsp(perm_gl, gsp, P_gl, P_gsp);

  r.lhs_set = texts_of(adm_gsp);
  r.rhs_set = texts_of(perm_cap);
  r.pass = adm_gsp == adm_cap && adm_gsp == perm_cap;
  if (!r.pass) {
    r.counterexample = adm_gsp != adm_cap ? first_mismatch("adm-cap", adm_gsp, adm_cap)
                                          : first_mismatch("perm-cap", adm_gsp, perm_cap);
  } else {
    const CosetSet a_d = to_double_cosets(adm_gsp, I);
    const CosetSet b_d = to_double_cosets(adm_cap, I);
    const CosetSet c_d = to_double_cosets(perm_cap, I);
    if (a_d != b_d || a_d != c_d) {
      r.pass = false;
      r.counterexample = first_mismatch("double-cosets", a_d, c_d);
    }
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationReport verify_perm_eq_adm(int m, int s, const std::vector<int>& I_in,
                                      BruhatCache* cache) {
  const auto t0 = Clock::now();
  const GroupContext ctx = GroupContext::gsp(m);
  const LevelStructure I = make_level(ctx, I_in);
  const Vec mu = minuscule_mu(ctx, s);
  VerificationReport r;
  r.claim = "adm-eq-perm-kr-gsp";
  r.parameters = {{"m", std::to_string(m)}, {"s", std::to_string(s)}, {"I", join_ints(I.indices)}};

  const CosetSet adm = enumerate_admissible(ctx, mu, I, cache);
  const CosetSet perm = enumerate_perm_kr(ctx, mu, I);
  r.lhs_set = texts_of(adm);
  r.rhs_set = texts_of(perm);
  r.pass = adm == perm;
  if (!r.pass) r.counterexample = first_mismatch("adm-vs-perm", adm, perm);
  if (r.pass && to_double_cosets(adm, I) != to_double_cosets(perm, I)) {
    r.pass = false;
    r.counterexample = "double-coset projections differ";
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::vector<std::vector<int>> theta_stable_wall_sets(int m) {
  // orbit classes of walls under theta: {0}, {m}, {c, 2m-c}
  std::vector<std::vector<int>> classes;
  classes.push_back({0});
  classes.push_back({m});
  for (int c = 1; c < m; ++c) classes.push_back({c, 2 * m - c});
  std::vector<std::vector<int>> out;
  const int k = static_cast<int>(classes.size());
  for (int mask = 0; mask < (1 << k) - 1; ++mask) {  // proper subsets only
    std::vector<int> walls;
    for (int t = 0; t < k; ++t)
      if (mask & (1 << t)) walls.insert(walls.end(), classes[t].begin(), classes[t].end());
    std::sort(walls.begin(), walls.end());
    out.push_back(std::move(walls));
  }
  return out;
}

VerificationReport verify_steinberg_lemma(int m, const std::vector<int>& J,
                                          const std::vector<int>& J_prime, int max_len) {
  const auto t0 = Clock::now();
  const GroupContext gl = GroupContext::gl(2 * m);
  VerificationReport r;
  r.claim = "fixed-point-min-rep";
  r.parameters = {{"m", std::to_string(m)},
                  {"J", join_ints(J)},
                  {"J'", join_ints(J_prime)},
                  {"max_len", std::to_string(max_len)}};
  if (static_cast<int>(J.size()) >= num_base_walls(gl) ||
      static_cast<int>(J_prime.size()) >= num_base_walls(gl))
    throw std::invalid_argument("verify_steinberg_lemma: wall sets must be proper");

  const ParahoricSubgroup PJ = parahoric_from_walls(gl, J);
  const ParahoricSubgroup PJp = parahoric_from_walls(gl, J_prime);

  // ball of W_a elements of length <= max_len (right gallery moves)
  std::vector<WeylElement> walls;
  for (int c = 0; c < num_base_walls(gl); ++c)
    walls.push_back(reflection(gl, base_alcove_wall(gl, c)));
  ElementSet seen;
  std::deque<WeylElement> queue;
  WeylElement e = identity(gl);
  seen.insert(e);
  queue.push_back(e);
  std::vector<WeylElement> ball{e};
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    for (const auto& sref : walls) {
      WeylElement next = compose(w, sref);
      if (length(next) <= max_len && seen.insert(next).second) {
        queue.push_back(next);
        ball.push_back(next);
      }
    }
  }

  long long met = 0, checked = 0;
  r.pass = true;
  // invariants 0 and m cover all classes up to central translation
  for (long long K : {0LL, static_cast<long long>(m)}) {
    const WeylElement omega = omega_element(gl, K);
    for (const auto& x : ball) {
      const WeylElement w = compose(x, omega);
      ++checked;
      bool meets = false;
      for (const auto& u : PJ.elements) {
        const WeylElement uw = compose(u, w);
        for (const auto& v : PJp.elements) {
          if (in_gsp_image(compose(uw, v))) {
            meets = true;
            break;
          }
        }
        if (meets) break;
      }
      if (!meets) continue;
      ++met;
      const WeylElement w0 = min_length_rep(w, PJ, PJp);
      if (!in_gsp_image(w0)) {
        r.pass = false;
        r.counterexample = "min rep " + canonical_text(w0) + " of coset of " + canonical_text(w) +
                           " lies outside the embedded subgroup";
        break;
      }
    }
    if (!r.pass) break;
  }
  r.lhs_set = {"cosets-meeting-subgroup:" + std::to_string(met)};
  r.rhs_set = {"min-reps-inside:" + std::to_string(r.pass ? met : met - 1)};
  r.parameters["elements_checked"] = std::to_string(checked);
  r.elapsed_ms = ms_since(t0);
  return r;
}

Vec random_dominant_mu(const GroupContext& ctx, std::uint64_t seed, int band) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> entry(0, band);
  switch (ctx.kind) {
    case GroupKind::GL: {
      Vec v(static_cast<std::size_t>(ctx.dim));
      for (auto& x : v) x = entry(rng);
      std::sort(v.begin(), v.end(), std::greater<>());
      return v;
    }
    case GroupKind::GSp:
    case GroupKind::GU: {
      const int m = ctx.half();
      // draw the pair sum, then the front half inside the band
      const long long c = ctx.kind == GroupKind::GU
                              ? 2 * std::uniform_int_distribution<long long>(0, band)(rng)
                              : std::uniform_int_distribution<long long>(0, 2 * band)(rng);
      const long long lo = (c + 1) / 2, hi = std::min<long long>(band, c);
      Vec front(static_cast<std::size_t>(m));
      std::uniform_int_distribution<long long> front_entry(lo, std::max(lo, hi));
      for (auto& x : front) x = front_entry(rng);
      std::sort(front.begin(), front.end(), std::greater<>());
      Vec v(static_cast<std::size_t>(ctx.dim));
      for (int j = 0; j < m; ++j) {
        v[j] = front[j];
        v[ctx.dim - 1 - j] = c - front[j];
      }
      if (ctx.kind == GroupKind::GU) v[m] = c / 2;
      return v;
    }
  }
  throw std::logic_error("random_dominant_mu: unreachable");
}

VerificationReport verify_basic_lemmas(int m, std::uint64_t seed, int samples, bool corrupt) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.claim = "per-element-laws";
  r.parameters = {{"m", std::to_string(m)},
                  {"samples", std::to_string(samples)},
                  {"corrupt", corrupt ? "true" : "false"}};
  r.seed = seed;
  std::mt19937_64 rng(seed);

  const GroupContext gu = GroupContext::gu(m);
  const GroupContext gsp = GroupContext::gsp(m);
  const GroupContext gl = GroupContext::gl(2 * m);
  const auto gu_perms = finite_weyl_elements(gu);

  auto run_check = [&](const std::string& label, auto&& body) {
    r.lhs_set.push_back(label);
    std::string fail = body();
    if (fail.empty()) {
      r.rhs_set.push_back(label);
    } else if (r.counterexample.empty()) {
      r.counterexample = label + ": " + fail;
    }
  };

  run_check("face-conditions-and-band-inequalities", [&]() -> std::string {
    std::uniform_int_distribution<std::size_t> pick_perm(0, gu_perms.size() - 1);
    std::uniform_int_distribution<long long> entry(-3, 3);
    std::uniform_int_distribution<int> pick_i(0, m);
    for (int t = 0; t < samples; ++t) {
      Vec lam(static_cast<std::size_t>(gu.dim));
      lam[m] = entry(rng);
      for (int j = 0; j < m; ++j) {
        lam[j] = entry(rng);
        lam[gu.dim - 1 - j] = 2 * lam[m] - lam[j];
      }
      const WeylElement w = make_element(gu, gu_perms[pick_perm(rng)], lam);
      std::vector<int> I_set{pick_i(rng)};
      if (pick_i(rng) % 2 == 0) I_set.push_back(pick_i(rng));
      const LevelStructure I = make_level(gu, I_set);
      const FaceOfTypeI f = face_of(w, I);
      if (auto v = validate_face(f); !v.empty())
        return "face " + canonical_text(w) + " violates " + v.front().condition;
      MuFamily fam = mu_family(f);
      if (auto v = validate_mu_family(fam); !v.empty())
        return "mu family of " + canonical_text(w) + " violates " + v.front().condition;
      if (corrupt && t == samples / 2) fam.mu.front()[0] += 2;  // negative control
      std::vector<PairSumViolation> bad;
      if (!check_basic_inequalities(fam, &bad))
        return "band violation at residue " + std::to_string(bad.front().residue) +
               ", coordinate " + std::to_string(bad.front().j) + " (sum " +
               std::to_string(bad.front().sum) + " outside [" + std::to_string(bad.front().lo) +
               "," + std::to_string(bad.front().hi) + "]) for " + canonical_text(w);
      // middle-entry rule and the self-duality criterion
      for (std::size_t idx = 0; idx < fam.mu.size(); ++idx) {
        const Vec& mu = fam.mu[idx];
        if (2 * mu[m] != fam.d) return "middle entry != d/2 for " + canonical_text(w);
        const int i = std::min(fam.reps[idx], (gu.dim - fam.reps[idx]) % gu.dim);
        bool all_A = true, all_B = true;
        for (int j = 1; j <= gu.dim; ++j) {
          const bool in_A = j <= i || j >= gu.dim + 1 - i;
          const long long sum2 = mu[j - 1] + mu[gu.dim - j];
          (in_A ? all_A : all_B) &= sum2 == fam.d;
        }
        if ((all_A || all_B) && !is_self_dual(mu, fam.d))
          return "band equality without self-duality for " + canonical_text(w);
      }
    }
    return "";
  });

  run_check("hull-prefix-suffix-and-fixed-point", [&]() -> std::string {
    std::uniform_int_distribution<long long> num(-8, 8);
    for (int t = 0; t < samples; ++t) {
      const DominantCochar mu_gl{gl, random_dominant_mu(gl, rng(), 3)};
      RatVec x{Vec(static_cast<std::size_t>(gl.dim)), 2};
      for (auto& v : x.num) v = num(rng);
      if (conv_hull_member_gl(mu_gl, x) != conv_hull_member_gl_suffix(mu_gl, x))
        return "GL prefix/suffix forms disagree";
      const Vec mu_v = random_dominant_mu(gsp, rng(), 3);
      const DominantCochar mu_sp{gsp, mu_v};
      const DominantCochar mu_sp_as_gl{gl, mu_v};
      // a rational point of the apartment
      RatVec y{Vec(static_cast<std::size_t>(gsp.dim)), 2};
      const long long cy = num(rng);
      for (int j = 0; j < m; ++j) {
        y.num[j] = num(rng);
        y.num[gsp.dim - 1 - j] = cy - y.num[j];
      }
      if (conv_hull_member_gsp(mu_sp, y) != conv_hull_member_gsp_suffix(mu_sp, y))
        return "GSp prefix/suffix forms disagree";
      if (conv_hull_member_gsp(mu_sp, y) !=
          (conv_hull_member_gl(mu_sp_as_gl, y) &&
           y.num.front() + y.num.back() == (mu_v.front() + mu_v.back()) * y.den))
        return "GSp hull != GL hull restricted to the apartment";
    }
    return "";
  });

  run_check("sign-relations-exhaustive", [&]() -> std::string {
    for (int n : {3, 5}) {
      const int mm = (n - 1) / 2;
      const int two_n = 2 * n;
      std::vector<int> subset(static_cast<std::size_t>(n));
      // iterate all n-subsets of {1..2n}
      for (int v = 0; v < n; ++v) subset[v] = v + 1;
      while (true) {
        const int sgn = sigma_sign(subset, two_n);
        if (sgn != sigma_sign(perp_set(subset, two_n), two_n))
          return "sgn(sigma_E) != sgn(sigma_{E-perp}) at n=" + std::to_string(n);
        const int want = (mm + 1) % 2 == 0 ? sgn : -sgn;
        if (sigma_prime_sign(subset, two_n) != want)
          return "alternative-convention sign relation fails at n=" + std::to_string(n);
        // next combination
        int t = n - 1;
        while (t >= 0 && subset[t] == two_n - (n - 1 - t)) --t;
        if (t < 0) break;
        ++subset[t];
        for (int u = t + 1; u < n; ++u) subset[u] = subset[u - 1] + 1;
      }
    }
    return "";
  });

  r.pass = r.lhs_set == r.rhs_set;
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::string report_table(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.claim << "  [";
    bool first = true;
    for (const auto& [k, v] : r.parameters) {
      if (!first) os << " ";
      first = false;
      os << k << "=" << v;
    }
    os << "]  |lhs|=" << r.lhs_set.size() << " |rhs|=" << r.rhs_set.size();
    os << "  " << static_cast<long long>(r.elapsed_ms) << "ms";
    if (!r.pass) os << "\n      counterexample: " << r.counterexample;
    os << "\n";
  }
  return os.str();
}

}  // namespace admset
