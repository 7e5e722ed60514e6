#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "admset/context.hpp"

namespace admset {

/// Extended affine Weyl group element w = t_lambda . sigma, acting on the
/// apartment by x |-> lambda + sigma x with (sigma x)(j) = x(sigma^{-1}(j)).
/// perm is one-line and 1-indexed: perm[j-1] = sigma(j).
struct WeylElement {
  GroupContext ctx;
  std::vector<int> perm;
  Vec trans;

  bool operator==(const WeylElement& o) const {
    return ctx == o.ctx && perm == o.perm && trans == o.trans;
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
};

WeylElement identity(const GroupContext& ctx);

/// Validating constructor; throws std::invalid_argument on a non-bijective
/// perm, a star-symmetry violation, or a lattice violation.
WeylElement make_element(const GroupContext& ctx, std::vector<int> perm, Vec trans);

/// t_lambda; throws if lambda violates the lattice constraints.
WeylElement translation(const GroupContext& ctx, Vec lambda);

/// Finite Weyl part only (zero translation).
WeylElement finite_perm(const GroupContext& ctx, std::vector<int> perm);

WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& a);

Vec permute(const std::vector<int>& perm, const Vec& x);
Vec affine_action(const WeylElement& w, const Vec& x);
RatVec affine_action(const WeylElement& w, const RatVec& x);

/// Class of w in W~/W_a = Omega, as an integer:
///   GL: sum of trans;  GSp: c(trans) = trans_1 + trans_{2m};  GU: trans_{m+1}.
long long kottwitz_invariant(const WeylElement& w);

/// Drop coordinate m+1: injective homomorphism W~_GU(m) -> W~_GSp(m) whose
/// image is the index-2 subgroup of even invariant.
WeylElement embed_gu_to_gsp(const WeylElement& w);

/// Identity on data: W~_GSp(m) -> W~_GL(2m).
WeylElement embed_gsp_to_gl(const WeylElement& w);

/// Partial inverse of embed_gu_to_gsp; requires even invariant.
WeylElement lift_gsp_to_gu(const WeylElement& w);

/// True if a GL(2m) element lies in the embedded W~_GSp(m).
bool in_gsp_image(const WeylElement& gl_elem);
/// Reinterpret an embedded GL(2m) element as a GSp(m) element.
WeylElement restrict_gl_to_gsp(const WeylElement& gl_elem);

/// Orbit of a lattice vector under the finite Weyl group (coordinate
/// permutations; S_N for GL, S_{2m}^* / S_n^* otherwise), deduplicated.
std::vector<Vec> weyl_orbit(const GroupContext& ctx, const Vec& mu);

/// All elements of the finite Weyl group as one-line permutations.
std::vector<std::vector<int>> finite_weyl_elements(const GroupContext& ctx);

/// Canonical text form "perm=[...];trans=[...]".
std::string canonical_text(const WeylElement& w);
WeylElement parse_element(const GroupContext& ctx, const std::string& text);

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const;
};

}  // namespace admset
