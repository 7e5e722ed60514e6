#pragma once

#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "admset/context.hpp"
#include "admset/element.hpp"
#include "admset/level.hpp"

namespace admset {

/// Affine hyperplane x_i - x_j = k intersected with the apartment.
/// Pairs are canonical: i < j for GL; i < j <= i* with j != m+1 for GSp/GU,
/// so that each apartment wall is listed once.
struct Hyperplane {
  int i;
  int j;
  long long k;

  bool operator==(const Hyperplane& o) const { return i == o.i && j == o.j && k == o.k; }
};

/// Canonical coordinate pairs indexing the wall directions of the context.
const std::vector<std::pair<int, int>>& root_pairs(const GroupContext& ctx);

/// A fixed interior point of the base alcove.  GL: barycenter of the
/// omega_i; GSp/GU: barycenter of the eta_i, which satisfies
/// x_{dim} - 1 < x_1 < x_2 < ... strictly.
RatVec base_alcove_point(const GroupContext& ctx);

/// True if the (rational) point lies strictly inside the base alcove.
bool in_base_alcove(const GroupContext& ctx, const RatVec& p);

/// Reflection across the wall as a group element (the paired coordinates
/// are swapped simultaneously in GSp/GU).
WeylElement reflection(const GroupContext& ctx, const Hyperplane& h);

/// Walls of the base alcove indexed 0..m (GSp/GU) or 0..N-1 (GL);
/// wall c > 0 is x_c = x_{c+1} (x_m = x_{m+2} for GU wall m) and wall 0 is
/// x_1 - x_{dim} = -1.
Hyperplane base_alcove_wall(const GroupContext& ctx, int wall_index);
int num_base_walls(const GroupContext& ctx);

/// The walls strictly separating the base alcove from its image under w;
/// the count is the length of w.
std::vector<Hyperplane> separating_hyperplanes(const WeylElement& w);
int length(const WeylElement& w);

/// Generator of the base-alcove stabilizer Omega with invariant 1, and its
/// power with a given invariant.
WeylElement omega_generator(const GroupContext& ctx);
WeylElement omega_element(const GroupContext& ctx, long long invariant);

/// Unique factorization w = w_a . omega with omega in Omega (length 0) and
/// w_a of invariant 0.
std::pair<WeylElement, WeylElement> omega_decompose(const WeylElement& w);

/// Elements covered by w in Bruhat order: r.w for r a separating-wall
/// reflection with length exactly one less.
std::vector<WeylElement> covers_below(const WeylElement& w);

using ElementSet = std::unordered_set<WeylElement, WeylElementHash>;

/// Optional persistent store for downward closures; see io.hpp for the
/// file format.
class ClosureDiskCache;

/// Memoized Bruhat machinery.  Closures are cached per canonical seed set;
/// concurrent readers share the map, insertions are exclusive.
class BruhatCache {
 public:
  BruhatCache() = default;
  explicit BruhatCache(std::shared_ptr<ClosureDiskCache> disk) : disk_(std::move(disk)) {}

  /// The full lower interval {x : x <= seed}.
  std::shared_ptr<const ElementSet> closure(const WeylElement& seed);
  /// Union of lower intervals, computed with one shared traversal.
  std::shared_ptr<const ElementSet> union_closure(std::span<const WeylElement> seeds);

  void clear();

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<const ElementSet>> memo_;
  std::shared_ptr<ClosureDiskCache> disk_;
};

/// x <= y in Bruhat order (same Omega component and x in the lower
/// interval of y).  Pass a cache to reuse closures across queries.
bool bruhat_leq(const WeylElement& a, const WeylElement& b, BruhatCache* cache = nullptr);

/// Union of the lower intervals of the seeds.
ElementSet downward_closure(std::span<const WeylElement> seeds, BruhatCache* cache = nullptr);

/// Finite reflection subgroup attached to a level (or to an explicit set
/// of base-alcove walls).
struct ParahoricSubgroup {
  GroupContext ctx;
  std::vector<int> wall_indices;          // generating walls of the base alcove
  std::vector<WeylElement> generators;    // the corresponding reflections
  std::vector<WeylElement> elements;      // full enumeration, identity first

  bool trivial() const { return generators.empty(); }
};

ParahoricSubgroup parahoric_from_walls(const GroupContext& ctx, std::vector<int> walls);
/// W_{G,I}: generated by the base-alcove walls fixing every omega_i,
/// i in I u (period - I); these are the walls whose index is not in I
/// (not in the residue set, for GL).
ParahoricSubgroup parahoric(const GroupContext& ctx, const LevelStructure& I);
ParahoricSubgroup trivial_parahoric(const GroupContext& ctx);

/// Unique minimal-length element of left.w.right.
WeylElement min_length_rep(const WeylElement& w, const ParahoricSubgroup& left,
                           const ParahoricSubgroup& right);

/// Bruhat order on (double) cosets via minimal-length representatives.
bool bruhat_leq_cosets(const WeylElement& a, const WeylElement& b,
                       const ParahoricSubgroup& left, const ParahoricSubgroup& right,
                       BruhatCache* cache = nullptr);

}  // namespace admset
