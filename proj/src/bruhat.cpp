#include "admset/bruhat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "admset/io.hpp"

namespace admset {

namespace {

long long floor_div(long long a, long long b) {  // b > 0
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

struct KindDim {
  GroupKind kind;
  int dim;
  bool operator<(const KindDim& o) const {
    return kind != o.kind ? kind < o.kind : dim < o.dim;
  }
};

}  // namespace

const std::vector<std::pair<int, int>>& root_pairs(const GroupContext& ctx) {
  thread_local std::map<KindDim, std::vector<std::pair<int, int>>> cache;
  auto [it, fresh] = cache.try_emplace(KindDim{ctx.kind, ctx.dim});
  if (fresh) {
    const int n = ctx.dim;
    auto& pairs = it->second;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (ctx.kind != GroupKind::GL) {
          if (i + j > n + 1) continue;  // mirror class (j*, i*) already listed
          if (ctx.kind == GroupKind::GU && j == ctx.middle()) continue;
        }
        pairs.emplace_back(i, j);
      }
  }
  return it->second;
}

RatVec base_alcove_point(const GroupContext& ctx) {
  const int n = ctx.dim;
  if (ctx.kind == GroupKind::GL) {
    // barycenter of omega_0..omega_{N-1}
    Vec num(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) num[j - 1] = -(n - j);
    return {std::move(num), n};
  }
  // barycenter of eta_0..eta_m
  const int m = ctx.half();
  Vec num(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= m; ++j) {
    num[j - 1] = -(m + 1 - j);
    num[n - j] = m + 1 - j;
  }
  return {std::move(num), 2LL * (m + 1)};
}

bool in_base_alcove(const GroupContext& ctx, const RatVec& p) {
  if (static_cast<int>(p.num.size()) != ctx.dim) return false;
  if (!on_apartment(ctx, p)) return false;
  const int n = ctx.dim;
  for (int j = 0; j + 1 < n; ++j)
    if (!(p.num[j] < p.num[j + 1])) return false;
  return p.num[n - 1] - p.den < p.num[0];
}

WeylElement reflection(const GroupContext& ctx, const Hyperplane& h) {
  const int n = ctx.dim;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  Vec trans(static_cast<std::size_t>(n), 0);
  auto swap_pair = [&](int i, int j, long long k) {
    perm[i - 1] = j;
    perm[j - 1] = i;
    trans[i - 1] = k;
    trans[j - 1] = -k;
  };
  swap_pair(h.i, h.j, h.k);
  if (ctx.kind != GroupKind::GL) {
    const int is = n + 1 - h.i, js = n + 1 - h.j;
    if (js != h.i) swap_pair(js, is, h.k);  // mirrored coordinates move together
  }
  return make_element(ctx, std::move(perm), std::move(trans));
}

int num_base_walls(const GroupContext& ctx) {
  return ctx.kind == GroupKind::GL ? ctx.dim : ctx.half() + 1;
}

Hyperplane base_alcove_wall(const GroupContext& ctx, int c) {
  const int n = ctx.dim;
  if (c < 0 || c >= num_base_walls(ctx))
    throw std::invalid_argument("base_alcove_wall: index out of range");
  if (c == 0) return {1, n, -1};
  if (ctx.kind == GroupKind::GL) return {c, c + 1, 0};
  const int m = ctx.half();
  if (c < m) return {c, c + 1, 0};
  // wall m: x_m = x_{m+1} for GSp, x_m = x_{m+2} for GU
  return ctx.kind == GroupKind::GSp ? Hyperplane{m, m + 1, 0} : Hyperplane{m, m + 2, 0};
}

std::vector<Hyperplane> separating_hyperplanes(const WeylElement& w) {
  const RatVec p = base_alcove_point(w.ctx);
  const RatVec q = affine_action(w, p);
  const long long D = p.den;
  std::vector<Hyperplane> out;
  for (auto [i, j] : root_pairs(w.ctx)) {
    long long a = p.num[i - 1] - p.num[j - 1];
    long long b = q.num[i - 1] - q.num[j - 1];
    if (a > b) std::swap(a, b);
    for (long long k = floor_div(a, D) + 1; k * D < b; ++k) out.push_back({i, j, k});
  }
  return out;
}

int length(const WeylElement& w) {
  const RatVec p = base_alcove_point(w.ctx);
  const RatVec q = affine_action(w, p);
  const long long D = p.den;
  long long total = 0;
  for (auto [i, j] : root_pairs(w.ctx)) {
    long long a = p.num[i - 1] - p.num[j - 1];
    long long b = q.num[i - 1] - q.num[j - 1];
    if (a > b) std::swap(a, b);
    long long cnt = floor_div(b - 1, D) - floor_div(a, D);
    if (cnt > 0) total += cnt;
  }
  return static_cast<int>(total);
}

WeylElement omega_generator(const GroupContext& ctx) {
  const int n = ctx.dim;
  switch (ctx.kind) {
    case GroupKind::GL: {
      // sigma(1) = N, sigma(j) = j-1; trans = e_N
      std::vector<int> perm(static_cast<std::size_t>(n));
      perm[0] = n;
      for (int j = 2; j <= n; ++j) perm[j - 1] = j - 1;
      Vec trans(static_cast<std::size_t>(n), 0);
      trans[n - 1] = 1;
      return make_element(ctx, std::move(perm), std::move(trans));
    }
    case GroupKind::GSp: {
      const int m = ctx.half();
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int j = 1; j <= m; ++j) {
        perm[j - 1] = j + m;
        perm[j + m - 1] = j;
      }
      Vec trans(static_cast<std::size_t>(n), 0);
      for (int j = m; j < n; ++j) trans[j] = 1;
      return make_element(ctx, std::move(perm), std::move(trans));
    }
    case GroupKind::GU:
      return translation(ctx, Vec(static_cast<std::size_t>(n), 1));
  }
  throw std::logic_error("omega_generator: unreachable");
}

WeylElement omega_element(const GroupContext& ctx, long long invariant) {
  WeylElement rho = omega_generator(ctx);
  if (invariant < 0) {
    rho = inverse(rho);
    invariant = -invariant;
  }
  WeylElement out = identity(ctx);
  for (long long t = 0; t < invariant; ++t) out = compose(out, rho);
  return out;
}

std::pair<WeylElement, WeylElement> omega_decompose(const WeylElement& w) {
  WeylElement omega = omega_element(w.ctx, kottwitz_invariant(w));
  WeylElement wa = compose(w, inverse(omega));
  return {std::move(wa), std::move(omega)};
}

std::vector<WeylElement> covers_below(const WeylElement& w) {
  const int len = length(w);
  std::vector<WeylElement> out;
  for (const Hyperplane& h : separating_hyperplanes(w)) {
    WeylElement cand = compose(reflection(w.ctx, h), w);
    if (length(cand) == len - 1) out.push_back(std::move(cand));
  }
  return out;
}

namespace {

ElementSet bfs_closure(std::span<const WeylElement> seeds) {
  ElementSet seen;
  std::deque<WeylElement> queue;
  for (const auto& s : seeds)
    if (seen.insert(s).second) queue.push_back(s);
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    for (auto& c : covers_below(w))
      if (seen.insert(c).second) queue.push_back(std::move(c));
  }
  return seen;
}

std::string seeds_key(std::span<const WeylElement> seeds) {
  std::vector<std::string> texts;
  texts.reserve(seeds.size());
  std::vector<long long> components;
  for (const auto& s : seeds) {
    texts.push_back(canonical_text(s));
    components.push_back(kottwitz_invariant(s));
  }
  std::sort(texts.begin(), texts.end());
  texts.erase(std::unique(texts.begin(), texts.end()), texts.end());
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());
  std::ostringstream os;
  os << to_string(seeds.front().ctx.kind) << ":" << seeds.front().ctx.rank << ":";
  for (long long c : components) os << c << ",";
  for (const auto& t : texts) os << "|" << t;
  return os.str();
}

}  // namespace

std::shared_ptr<const ElementSet> BruhatCache::union_closure(std::span<const WeylElement> seeds) {
  if (seeds.empty()) return std::make_shared<const ElementSet>();
  const std::string key = seeds_key(seeds);
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  std::shared_ptr<const ElementSet> result;
  if (disk_) {
    if (auto texts = disk_->load(key)) {
      ElementSet set;
      for (const auto& t : *texts) set.insert(parse_element(seeds.front().ctx, t));
      result = std::make_shared<const ElementSet>(std::move(set));
    }
  }
  if (!result) {
    result = std::make_shared<const ElementSet>(bfs_closure(seeds));
    if (disk_) {
      std::vector<std::string> texts;
      texts.reserve(result->size());
      for (const auto& e : *result) texts.push_back(canonical_text(e));
      std::sort(texts.begin(), texts.end());
      disk_->store(key, texts);
    }
  }
  std::unique_lock lock(mu_);
  auto [it, fresh] = memo_.try_emplace(key, result);
  return it->second;  // keep the first insertion on a race
}

std::shared_ptr<const ElementSet> BruhatCache::closure(const WeylElement& seed) {
  return union_closure(std::span<const WeylElement>(&seed, 1));
}

void BruhatCache::clear() {
  std::unique_lock lock(mu_);
  memo_.clear();
}

bool bruhat_leq(const WeylElement& a, const WeylElement& b, BruhatCache* cache) {
  if (a.ctx != b.ctx) throw std::invalid_argument("bruhat_leq: context mismatch");
  if (a == b) return true;
  if (kottwitz_invariant(a) != kottwitz_invariant(b)) return false;
  if (length(a) >= length(b)) return false;
  if (cache) return cache->closure(b)->count(a) > 0;
  return bfs_closure(std::span<const WeylElement>(&b, 1)).count(a) > 0;
}

ElementSet downward_closure(std::span<const WeylElement> seeds, BruhatCache* cache) {
  if (seeds.empty()) return {};
  for (const auto& s : seeds)
    if (s.ctx != seeds.front().ctx)
      throw std::invalid_argument("downward_closure: seeds must share a context");
  if (cache) return *cache->union_closure(seeds);
  return bfs_closure(seeds);
}

ParahoricSubgroup parahoric_from_walls(const GroupContext& ctx, std::vector<int> walls) {
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  ParahoricSubgroup P{ctx, walls, {}, {}};
  for (int c : walls) P.generators.push_back(reflection(ctx, base_alcove_wall(ctx, c)));
  // closure enumeration; proper wall subsets generate finite groups
  ElementSet seen;
  std::deque<WeylElement> queue;
  WeylElement e = identity(ctx);
  seen.insert(e);
  queue.push_back(e);
  P.elements.push_back(std::move(e));
  const std::size_t hard_cap = 50'000'000;
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : P.generators) {
      WeylElement next = compose(w, g);
      if (seen.insert(next).second) {
        queue.push_back(next);
        P.elements.push_back(std::move(next));
        if (seen.size() > hard_cap)
          throw std::runtime_error("parahoric_from_walls: group is not finite");
      }
    }
  }
  return P;
}

ParahoricSubgroup parahoric(const GroupContext& ctx, const LevelStructure& I) {
  if (I.indices.empty()) throw std::invalid_argument("parahoric: level must be nonempty");
  std::vector<int> complement;
  if (ctx.kind == GroupKind::GL) {
    for (int c = 0; c < ctx.dim; ++c)
      if (!std::binary_search(I.indices.begin(), I.indices.end(), c)) complement.push_back(c);
  } else {
    for (int c = 0; c <= ctx.half(); ++c)
      if (!std::binary_search(I.indices.begin(), I.indices.end(), c)) complement.push_back(c);
  }
  return parahoric_from_walls(ctx, std::move(complement));
}

ParahoricSubgroup trivial_parahoric(const GroupContext& ctx) {
  ParahoricSubgroup P{ctx, {}, {}, {}};
  P.elements.push_back(identity(ctx));
  return P;
}

WeylElement min_length_rep(const WeylElement& w, const ParahoricSubgroup& left,
                           const ParahoricSubgroup& right) {
  if (left.ctx != w.ctx || right.ctx != w.ctx)
    throw std::invalid_argument("min_length_rep: context mismatch");
  WeylElement cur = w;
  int len = length(cur);
  bool improved = true;
  while (improved && len > 0) {
    improved = false;
    for (const auto& g : left.generators) {
      WeylElement cand = compose(g, cur);
      const int cand_len = length(cand);
      if (cand_len < len) {
        cur = std::move(cand);
        len = cand_len;
        improved = true;
        break;
      }
    }
    if (improved) continue;
    for (const auto& g : right.generators) {
      WeylElement cand = compose(cur, g);
      const int cand_len = length(cand);
      if (cand_len < len) {
        cur = std::move(cand);
        len = cand_len;
        improved = true;
        break;
      }
    }
  }
  return cur;
}

bool bruhat_leq_cosets(const WeylElement& a, const WeylElement& b, const ParahoricSubgroup& left,
                       const ParahoricSubgroup& right, BruhatCache* cache) {
  return bruhat_leq(min_length_rep(a, left, right), min_length_rep(b, left, right), cache);
}

}  // namespace admset
