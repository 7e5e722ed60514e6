#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace admset {

using Vec = std::vector<long long>;

/// The three families of extended affine Weyl groups handled by this
/// library.  GL(N) acts on Z^N; GSp(m) on the pair-sum lattice in Z^{2m};
/// GU(m) on the coinvariant lattice in Z^n with n = 2m+1 odd.
enum class GroupKind { GL, GSp, GU };

struct GroupContext {
  GroupKind kind;
  int rank;  // N for GL, m for GSp and GU
  int dim;   // ambient coordinates: N, 2m, or 2m+1

  static GroupContext gl(int N) {
    if (N < 1) throw std::invalid_argument("GL rank must be positive");
    return {GroupKind::GL, N, N};
  }
  static GroupContext gsp(int m) {
    if (m < 1) throw std::invalid_argument("GSp rank must be positive");
    return {GroupKind::GSp, m, 2 * m};
  }
  static GroupContext gu(int m) {
    // n = 2m+1 >= 3
    if (m < 1) throw std::invalid_argument("GU rank must satisfy m >= 1");
    return {GroupKind::GU, m, 2 * m + 1};
  }

  // m for GSp/GU; not meaningful for GL
  int half() const { return rank; }
  // middle coordinate (1-based) for GU
  int middle() const { return rank + 1; }
  // translation period of the standard vertex family omega_i
  int period() const { return kind == GroupKind::GU ? dim : dim; }

  bool operator==(const GroupContext& o) const {
    return kind == o.kind && rank == o.rank && dim == o.dim;
  }
  bool operator!=(const GroupContext& o) const { return !(*this == o); }
};

std::string to_string(GroupKind k);
std::string to_string(const GroupContext& ctx);

/// Membership in the context's translation lattice:
///   GL:   all of Z^N
///   GSp:  x_1+x_{2m} = ... = x_m+x_{m+1}
///   GU:   x_1+x_n = ... = x_m+x_{m+2} = 2 x_{m+1}
bool in_translation_lattice(const GroupContext& ctx, const Vec& x);

/// Star symmetry sigma(l+1-j) = l+1-sigma(j) for GSp/GU permutations
/// (one-line, 1-indexed).  Always true for GL.
bool star_symmetric(const GroupContext& ctx, const std::vector<int>& perm);

/// A rational vector num/den with a common positive denominator.
struct RatVec {
  Vec num;
  long long den = 1;

  static RatVec integral(const Vec& v) { return {v, 1}; }
};

bool operator==(const RatVec& a, const RatVec& b);

// Exact pair-sum / apartment membership for rational points.
bool on_apartment(const GroupContext& ctx, const RatVec& x);

}  // namespace admset
