#include "admset/element.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace admset {

namespace {

void check_same_context(const WeylElement& a, const WeylElement& b, const char* op) {
  if (a.ctx != b.ctx)
    throw std::invalid_argument(std::string(op) + ": context mismatch (" + to_string(a.ctx) +
                                " vs " + to_string(b.ctx) + ")");
}

bool is_bijection(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

}  // namespace

WeylElement identity(const GroupContext& ctx) {
  std::vector<int> perm(static_cast<std::size_t>(ctx.dim));
  std::iota(perm.begin(), perm.end(), 1);
  return {ctx, std::move(perm), Vec(static_cast<std::size_t>(ctx.dim), 0)};
}

WeylElement make_element(const GroupContext& ctx, std::vector<int> perm, Vec trans) {
  if (!is_bijection(perm, ctx.dim))
    throw std::invalid_argument("make_element: perm is not a permutation of 1.." +
                                std::to_string(ctx.dim));
  if (!star_symmetric(ctx, perm))
    throw std::invalid_argument("make_element: perm violates star symmetry for " + to_string(ctx));
  if (!in_translation_lattice(ctx, trans))
    throw std::invalid_argument("make_element: trans outside the translation lattice of " +
                                to_string(ctx));
  return {ctx, std::move(perm), std::move(trans)};
}

WeylElement translation(const GroupContext& ctx, Vec lambda) {
  if (!in_translation_lattice(ctx, lambda))
    throw std::invalid_argument("translation: vector outside the translation lattice of " +
                                to_string(ctx));
  WeylElement e = identity(ctx);
  e.trans = std::move(lambda);
  return e;
}

WeylElement finite_perm(const GroupContext& ctx, std::vector<int> perm) {
  return make_element(ctx, std::move(perm), Vec(static_cast<std::size_t>(ctx.dim), 0));
}

Vec permute(const std::vector<int>& perm, const Vec& x) {
  Vec y(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) y[perm[j] - 1] = x[j];
  return y;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  check_same_context(a, b, "compose");
  const int n = a.ctx.dim;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) perm[j] = a.perm[b.perm[j] - 1];
  Vec trans = permute(a.perm, b.trans);
  for (int j = 0; j < n; ++j) trans[j] += a.trans[j];
  return {a.ctx, std::move(perm), std::move(trans)};
}

WeylElement inverse(const WeylElement& a) {
  const int n = a.ctx.dim;
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) inv[a.perm[j] - 1] = j + 1;
  // (t_l s)^{-1} = t_{-s^{-1} l} s^{-1}
  Vec trans(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) trans[j] = -a.trans[a.perm[j] - 1];
  return {a.ctx, std::move(inv), std::move(trans)};
}

Vec affine_action(const WeylElement& w, const Vec& x) {
  if (x.size() != w.trans.size())
    throw std::invalid_argument("affine_action: dimension mismatch");
  Vec y = permute(w.perm, x);
  for (std::size_t j = 0; j < y.size(); ++j) y[j] += w.trans[j];
  return y;
}

RatVec affine_action(const WeylElement& w, const RatVec& x) {
  if (x.num.size() != w.trans.size())
    throw std::invalid_argument("affine_action: dimension mismatch");
  RatVec y{permute(w.perm, x.num), x.den};
  for (std::size_t j = 0; j < y.num.size(); ++j) y.num[j] += w.trans[j] * x.den;
  return y;
}

long long kottwitz_invariant(const WeylElement& w) {
  switch (w.ctx.kind) {
    case GroupKind::GL:
      return std::accumulate(w.trans.begin(), w.trans.end(), 0LL);
    case GroupKind::GSp:
      return w.trans.front() + w.trans.back();
    case GroupKind::GU:
      return w.trans[w.ctx.middle() - 1];
  }
  return 0;
}

WeylElement embed_gu_to_gsp(const WeylElement& w) {
  if (w.ctx.kind != GroupKind::GU)
    throw std::invalid_argument("embed_gu_to_gsp: expected a GU element");
  const int m = w.ctx.half();
  const int n = w.ctx.dim;
  const GroupContext out = GroupContext::gsp(m);
  // old index -> new index, skipping m+1
  auto drop = [m](int j) { return j <= m ? j : j - 1; };
  std::vector<int> perm(static_cast<std::size_t>(2 * m));
  Vec trans(static_cast<std::size_t>(2 * m));
  for (int j = 1; j <= n; ++j) {
    if (j == m + 1) continue;
    perm[drop(j) - 1] = drop(w.perm[j - 1]);
    trans[drop(j) - 1] = w.trans[j - 1];
  }
  return make_element(out, std::move(perm), std::move(trans));
}

WeylElement embed_gsp_to_gl(const WeylElement& w) {
  if (w.ctx.kind != GroupKind::GSp)
    throw std::invalid_argument("embed_gsp_to_gl: expected a GSp element");
  return {GroupContext::gl(w.ctx.dim), w.perm, w.trans};
}

WeylElement lift_gsp_to_gu(const WeylElement& w) {
  if (w.ctx.kind != GroupKind::GSp)
    throw std::invalid_argument("lift_gsp_to_gu: expected a GSp element");
  const long long c = kottwitz_invariant(w);
  if (c % 2 != 0)
    throw std::invalid_argument("lift_gsp_to_gu: invariant must be even (index-2 image)");
  const int m = w.ctx.half();
  const GroupContext out = GroupContext::gu(m);
  auto insert = [m](int j) { return j <= m ? j : j + 1; };
  std::vector<int> perm(static_cast<std::size_t>(2 * m + 1));
  Vec trans(static_cast<std::size_t>(2 * m + 1));
  perm[m] = m + 1;
  trans[m] = c / 2;
  for (int j = 1; j <= 2 * m; ++j) {
    perm[insert(j) - 1] = insert(w.perm[j - 1]);
    trans[insert(j) - 1] = w.trans[j - 1];
  }
  return make_element(out, std::move(perm), std::move(trans));
}

bool in_gsp_image(const WeylElement& gl_elem) {
  if (gl_elem.ctx.kind != GroupKind::GL || gl_elem.ctx.dim % 2 != 0) return false;
  const GroupContext gsp = GroupContext::gsp(gl_elem.ctx.dim / 2);
  return star_symmetric(gsp, gl_elem.perm) && in_translation_lattice(gsp, gl_elem.trans);
}

WeylElement restrict_gl_to_gsp(const WeylElement& gl_elem) {
  if (!in_gsp_image(gl_elem))
    throw std::invalid_argument("restrict_gl_to_gsp: element not in the embedded subgroup");
  return make_element(GroupContext::gsp(gl_elem.ctx.dim / 2), gl_elem.perm, gl_elem.trans);
}

std::vector<std::vector<int>> finite_weyl_elements(const GroupContext& ctx) {
  std::vector<std::vector<int>> out;
  const int n = ctx.dim;
  if (ctx.kind == GroupKind::GL) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }
  // S^*: choose images of positions 1..m as one value from each of m chosen
  // pairs {v, v*}, the rest forced by the star rule (middle fixed for GU).
  const int m = ctx.half();
  std::vector<int> pair_perm(static_cast<std::size_t>(m));
  std::iota(pair_perm.begin(), pair_perm.end(), 1);
  do {
    for (int signs = 0; signs < (1 << m); ++signs) {
      std::vector<int> p(static_cast<std::size_t>(n), 0);
      if (ctx.kind == GroupKind::GU) p[m] = m + 1;
      for (int j = 1; j <= m; ++j) {
        int v = pair_perm[j - 1];
        if (signs & (1 << (j - 1))) v = n + 1 - v;
        p[j - 1] = v;
        p[n - j] = n + 1 - v;
      }
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(pair_perm.begin(), pair_perm.end()));
  return out;
}

std::vector<Vec> weyl_orbit(const GroupContext& ctx, const Vec& mu) {
  if (!in_translation_lattice(ctx, mu))
    throw std::invalid_argument("weyl_orbit: vector outside the translation lattice");
  std::vector<Vec> orbit;
  for (const auto& p : finite_weyl_elements(ctx)) orbit.push_back(permute(p, mu));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

std::string canonical_text(const WeylElement& w) {
  std::ostringstream os;
  os << "perm=[";
  for (std::size_t j = 0; j < w.perm.size(); ++j) {
    if (j) os << ",";
    os << w.perm[j];
  }
  os << "];trans=[";
  for (std::size_t j = 0; j < w.trans.size(); ++j) {
    if (j) os << ",";
    os << w.trans[j];
  }
  os << "]";
  return os.str();
}

WeylElement parse_element(const GroupContext& ctx, const std::string& text) {
  auto read_list = [&text](std::size_t from, std::vector<long long>& out) -> std::size_t {
    std::size_t open = text.find('[', from);
    std::size_t close = text.find(']', open);
    if (open == std::string::npos || close == std::string::npos)
      throw std::invalid_argument("parse_element: malformed text \"" + text + "\"");
    std::istringstream is(text.substr(open + 1, close - open - 1));
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoll(tok));
    return close;
  };
  if (text.rfind("perm=", 0) != 0)
    throw std::invalid_argument("parse_element: malformed text \"" + text + "\"");
  std::vector<long long> p64, t64;
  std::size_t after_perm = read_list(0, p64);
  std::size_t tpos = text.find("trans=", after_perm);
  if (tpos == std::string::npos)
    throw std::invalid_argument("parse_element: missing trans in \"" + text + "\"");
  read_list(tpos, t64);
  std::vector<int> perm(p64.begin(), p64.end());
  return make_element(ctx, std::move(perm), Vec(t64.begin(), t64.end()));
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(w.ctx.kind));
  mix(static_cast<std::uint64_t>(w.ctx.dim));
  for (int p : w.perm) mix(static_cast<std::uint64_t>(p));
  for (long long t : w.trans) mix(static_cast<std::uint64_t>(t) * 2654435761ULL + 17);
  return static_cast<std::size_t>(h);
}

}  // namespace admset
