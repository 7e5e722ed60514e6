#include "admset/faces.hpp"

#include <algorithm>
#include <numeric>

namespace admset {

namespace {

void require_face_context(const GroupContext& ctx, const char* op) {
  if (ctx.kind == GroupKind::GL)
    throw std::invalid_argument(std::string(op) + ": faces are defined for GSp/GU contexts");
}

int rep_pos(const std::vector<int>& reps, int residue) {
  auto it = std::lower_bound(reps.begin(), reps.end(), residue);
  if (it == reps.end() || *it != residue)
    throw std::invalid_argument("face: residue " + std::to_string(residue) +
                                " is not a stored representative");
  return static_cast<int>(it - reps.begin());
}

Vec star(const Vec& v) {
  Vec out(v.rbegin(), v.rend());
  return out;
}

long long sum(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0LL); }

}  // namespace

const Vec& FaceOfTypeI::at_rep(int residue) const { return v[rep_pos(reps, residue)]; }

Vec FaceOfTypeI::at(long long i) const {
  const int period = ctx.period();
  long long b = i >= 0 ? i / period : -((-i + period - 1) / period);
  int c = static_cast<int>(i - b * period);
  Vec out = at_rep(c);
  for (auto& x : out) x -= b;  // F1
  return out;
}

const Vec& MuFamily::at_rep(int residue) const { return mu[rep_pos(reps, residue)]; }

FaceOfTypeI standard_face(const GroupContext& ctx, const LevelStructure& I) {
  require_face_context(ctx, "standard_face");
  FaceOfTypeI f{ctx, I, residue_reps(ctx, I), {}, 0};
  for (int r : f.reps) f.v.push_back(omega_vec(ctx, r));
  return f;
}

FaceOfTypeI face_of(const WeylElement& w, const LevelStructure& I) {
  require_face_context(w.ctx, "face_of");
  FaceOfTypeI f{w.ctx, I, residue_reps(w.ctx, I), {}, 0};
  for (int r : f.reps) f.v.push_back(affine_action(w, omega_vec(w.ctx, r)));
  // d is derived from F4 at the first representative (and validated there)
  const int r0 = f.reps.front();
  const Vec& v0 = f.at_rep(r0);
  Vec vm = f.at(-static_cast<long long>(r0));
  f.d = v0[0] + vm[vm.size() - 1];
  return f;
}

std::vector<FaceViolation> validate_face(const FaceOfTypeI& f) {
  std::vector<FaceViolation> out;
  const int period = f.ctx.period();
  const int k = static_cast<int>(f.reps.size());
  // F2/F3 on consecutive representatives, wrapping once around the period
  for (int t = 0; t < k; ++t) {
    const int r = f.reps[t];
    const bool wrap = t + 1 == k;
    const int rn = wrap ? f.reps[0] + period : f.reps[t + 1];
    Vec vn = f.v[wrap ? 0 : t + 1];
    if (wrap)
      for (auto& x : vn) x -= 1;  // F1 extension
    for (std::size_t j = 0; j < vn.size(); ++j)
      if (f.v[t][j] < vn[j]) {
        out.push_back({"F2", r, rn, "v_" + std::to_string(r) + " !>= v_" + std::to_string(rn)});
        break;
      }
    if (sum(f.v[t]) - sum(vn) != rn - r)
      out.push_back({"F3", r, rn,
                     "sum difference " + std::to_string(sum(f.v[t]) - sum(vn)) + " != " +
                         std::to_string(rn - r)});
  }
  // F4: v_i + v_{-i}* = d
  for (int t = 0; t < k; ++t) {
    const int r = f.reps[t];
    const Vec dual = star(f.at(-static_cast<long long>(r)));
    for (std::size_t j = 0; j < dual.size(); ++j)
      if (f.v[t][j] + dual[j] != f.d) {
        out.push_back({"F4", r, static_cast<long long>(j + 1),
                       "v_i + v_{-i}* = " + std::to_string(f.v[t][j] + dual[j]) + " != d = " +
                           std::to_string(f.d)});
        break;
      }
  }
  // forced by F3 + F4 when the period is odd; no constraint for GSp
  if (f.ctx.kind == GroupKind::GU && f.d % 2 != 0)
    out.push_back({"even-d", f.d, 0, "d must be even"});
  return out;
}

MuFamily mu_family(const FaceOfTypeI& f) {
  auto violations = validate_face(f);
  if (!violations.empty())
    throw std::invalid_argument("mu_family: invalid face (" + violations.front().condition + ": " +
                                violations.front().detail + ")");
  MuFamily m{f.ctx, f.level, f.reps, {}, f.d};
  for (std::size_t t = 0; t < f.reps.size(); ++t) {
    Vec mu = f.v[t];
    const Vec om = omega_vec(f.ctx, f.reps[t]);
    for (std::size_t j = 0; j < mu.size(); ++j) mu[j] -= om[j];
    m.mu.push_back(std::move(mu));
  }
  return m;
}

std::vector<FaceViolation> validate_mu_family(const MuFamily& m) {
  std::vector<FaceViolation> out;
  const int period = m.ctx.period();
  const long long s0 = sum(m.mu.front());
  for (std::size_t t = 1; t < m.mu.size(); ++t)
    if (sum(m.mu[t]) != s0)
      out.push_back({"mu-sum", m.reps[t], 0, "sum(mu_i) varies across indices"});
  for (std::size_t t = 0; t < m.mu.size(); ++t) {
    const int r = m.reps[t];
    const int rm = (period - r) % period;  // mu_{-i} = mu at the mirrored residue
    const Vec dual = star(m.at_rep(rm));
    for (std::size_t j = 0; j < dual.size(); ++j)
      if (m.mu[t][j] + dual[j] != m.d) {
        out.push_back({"mu-duality", r, static_cast<long long>(j + 1),
                       "mu_i + mu_{-i}* != d at coordinate " + std::to_string(j + 1)});
        break;
      }
  }
  if (m.ctx.kind == GroupKind::GU) {
    const int mid = m.ctx.middle();
    for (std::size_t t = 0; t < m.mu.size(); ++t)
      if (2 * m.mu[t][mid - 1] != m.d)
        out.push_back({"mu-middle", m.reps[t], mid,
                       "mu_i(m+1) = " + std::to_string(m.mu[t][mid - 1]) + " != d/2"});
  }
  return out;
}

std::vector<PairSumViolation> basic_inequality_violations(const MuFamily& m) {
  std::vector<PairSumViolation> out;
  const int n = m.ctx.dim;
  const int period = m.ctx.period();
  const auto& I = m.level.indices;
  for (std::size_t t = 0; t < m.mu.size(); ++t) {
    const int r = m.reps[t];
    const bool direct = std::binary_search(I.begin(), I.end(), r);
    const bool mirrored = std::binary_search(I.begin(), I.end(), (period - r) % period);
    const int i = direct ? r : (period - r) % period;
    for (int j = 1; j <= n; ++j) {
      const bool in_A = j <= i || j >= n + 1 - i;  // A_i = {1..i, i*..n}
      long long lo, hi;
      if (direct && mirrored) {
        lo = hi = m.d;  // self-mirrored residue: both bands apply
      } else if (direct) {
        lo = in_A ? m.d : m.d - 1;
        hi = in_A ? m.d + 1 : m.d;
      } else {
        lo = in_A ? m.d - 1 : m.d;
        hi = in_A ? m.d : m.d + 1;
      }
      const long long s = m.mu[t][j - 1] + m.mu[t][n - j];
      if (s < lo || s > hi) out.push_back({r, j, s, lo, hi});
    }
  }
  return out;
}

bool check_basic_inequalities(const MuFamily& m, std::vector<PairSumViolation>* out) {
  auto v = basic_inequality_violations(m);
  if (out) *out = v;
  return v.empty();
}

bool is_self_dual(const Vec& mu_i, long long d) {
  const std::size_t n = mu_i.size();
  for (std::size_t j = 0; j < n; ++j)
    if (mu_i[j] + mu_i[n - 1 - j] != d) return false;
  return true;
}

}  // namespace admset
