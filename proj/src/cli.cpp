#include "admset/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <memory>
#include <sstream>

#include "admset/bruhat.hpp"
#include "admset/harness.hpp"
#include "admset/io.hpp"
#include "admset/level.hpp"
#include "admset/permissibility.hpp"
#include "admset/spin.hpp"

namespace admset::cli {

namespace {

const std::vector<std::string> kSetKinds{"adm", "perm-kr", "wedge", "naive", "spin"};
const std::vector<std::string> kClaims{"equivalence", "intersect", "perm-adm", "steinberg",
                                       "basic",       "negative-control", "all"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

GroupContext make_context(const std::string& group, int rank) {
  if (group == "GL") return GroupContext::gl(rank);
  if (group == "GSP") return GroupContext::gsp(rank);
  if (group == "GU") return GroupContext::gu(rank);
  throw std::invalid_argument("unknown group \"" + group + "\"");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::ios_base::failure("write to " + path + " failed");
}

std::vector<std::vector<int>> nonempty_subsets(int m) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << (m + 1)); ++mask) {
    std::vector<int> I;
    for (int i = 0; i <= m; ++i)
      if (mask & (1 << i)) I.push_back(i);
    out.push_back(std::move(I));
  }
  return out;
}

/// Run tasks (possibly) in parallel, preserving result order.
std::vector<VerificationReport> run_tasks(
    std::vector<std::function<VerificationReport()>> tasks, int jobs) {
  std::vector<VerificationReport> out(tasks.size());
  if (jobs <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) out[t] = tasks[t]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      out[t] = tasks[t]();
    }
  };
  std::vector<std::future<void>> pool;
  for (int j = 0; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return out;
}

int run_enumerate(const RunConfig& c, std::ostream& out) {
  const GroupContext ctx = make_context(c.group, c.rank);
  const LevelStructure I = make_level(ctx, c.I);
  std::shared_ptr<ClosureDiskCache> disk;
  if (!c.cache_dir.empty()) disk = std::make_shared<ClosureDiskCache>(c.cache_dir);
  BruhatCache cache(disk);

  Vec mu = c.mu;
  if (mu.empty() && c.s >= 0 && ctx.kind != GroupKind::GL) mu = minuscule_mu(ctx, c.s);

  EnumerationResult result{ctx, c.set_kind, mu, c.s, I, {}};
  if (c.set_kind == "adm") {
    result.elements = enumerate_admissible(ctx, mu, I, &cache);
  } else if (c.set_kind == "perm-kr") {
    result.elements = enumerate_perm_kr(ctx, mu, I);
  } else if (c.set_kind == "wedge") {
    result.elements = enumerate_wedge(ctx, I, c.s);
    result.mu.clear();
  } else if (c.set_kind == "naive") {
    result.elements = enumerate_naive(ctx, I);
    result.mu.clear();
  } else if (c.set_kind == "spin") {
    result.elements = enumerate_spin(ctx, I, c.s);
    result.mu.clear();
  }

  const std::string json = result_to_json(result);
  out << json;
  if (!c.out_path.empty()) write_file(c.out_path, json);
  if (!c.csv_path.empty()) write_file(c.csv_path, result_to_csv(result));
  return 0;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  std::shared_ptr<ClosureDiskCache> disk;
  if (!c.cache_dir.empty()) disk = std::make_shared<ClosureDiskCache>(c.cache_dir);
  auto gsp_cache = std::make_shared<BruhatCache>(disk);
  auto gl_cache = std::make_shared<BruhatCache>(disk);

  // exhaustive ranges default to m <= 3 where only GSp-side state is needed
  // and m <= 2 where GL(2m) enumerations enter; --m raises either
  const int eq_max = c.max_m > 0 ? c.max_m : 3;
  const int gl_max = c.max_m > 0 ? c.max_m : 2;

  std::vector<std::function<VerificationReport()>> tasks;
  auto for_levels = [&](int m, auto&& fn) {
    if (!c.I.empty()) {
      for (int i : c.I)
        if (i < 0 || i > m) return;  // restriction does not apply at this rank
      fn(c.I);
    } else {
      for (const auto& I : nonempty_subsets(m)) fn(I);
    }
  };

  if (c.claim == "equivalence" || c.claim == "all") {
    for (int m = 1; m <= eq_max; ++m)
      for (int s = 0; s <= m; ++s) {
        if (c.s >= 0 && s != c.s) continue;
        for_levels(m, [&](const std::vector<int>& I) {
          tasks.push_back([m, s, I, gsp_cache]() {
            return verify_equivalence_gu(m, s, I, gsp_cache.get());
          });
        });
      }
  }
  if (c.claim == "intersect" || c.claim == "all") {
    for (int m = 1; m <= gl_max; ++m) {
      std::vector<Vec> mus;
      if (!c.mu.empty())
        mus.push_back(c.mu);
      else
        for (int k = 0; k < c.mu_count; ++k)
          mus.push_back(random_dominant_mu(GroupContext::gsp(m), c.seed + k, c.band));
      for (const auto& mu : mus)
        for_levels(m, [&](const std::vector<int>& I) {
          tasks.push_back([m, mu, I, gsp_cache, gl_cache]() {
            return verify_adm_perm_intersect(m, mu, I, gsp_cache.get(), gl_cache.get());
          });
        });
    }
  }
  if (c.claim == "perm-adm" || c.claim == "all") {
    for (int m = 1; m <= eq_max; ++m)
      for (int s = 0; s <= m; ++s) {
        if (c.s >= 0 && s != c.s) continue;
        for_levels(m, [&](const std::vector<int>& I) {
          tasks.push_back([m, s, I, gsp_cache]() {
            return verify_perm_eq_adm(m, s, I, gsp_cache.get());
          });
        });
      }
  }
  if (c.claim == "steinberg" || c.claim == "all") {
    for (int m = 1; m <= gl_max; ++m)
      for (const auto& J : theta_stable_wall_sets(m))
        for (const auto& Jp : theta_stable_wall_sets(m))
          tasks.push_back([m, J, Jp, max_len = c.max_len]() {
            return verify_steinberg_lemma(m, J, Jp, max_len);
          });
  }
  if (c.claim == "basic" || c.claim == "all") {
    for (int m = 1; m <= gl_max; ++m)
      tasks.push_back([m, seed = c.seed]() { return verify_basic_lemmas(m, seed); });
  }
  if (c.claim == "negative-control") {
    // deliberately corrupted input; the expected outcome is a FAIL row
    tasks.push_back([m = std::max(1, gl_max), seed = c.seed]() {
      return verify_basic_lemmas(m, seed, 200, true);
    });
  }

  std::vector<VerificationReport> reports = run_tasks(std::move(tasks), c.jobs);
  for (auto& r : reports) {
    if (r.seed == 0) r.seed = c.seed;
    if (!c.timing) r.elapsed_ms = 0.0;
  }
  out << report_table(reports);
  if (!c.out_path.empty()) write_file(c.out_path, reports_to_json(reports, c.timing));
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

int run_export(const RunConfig& c, std::ostream& out) {
  std::ifstream in(c.in_path);
  if (!in) throw std::ios_base::failure("cannot read " + c.in_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const EnumerationResult result = result_from_json(buf.str());
  if (!c.csv_path.empty()) write_file(c.csv_path, result_to_csv(result));
  if (!c.out_path.empty()) write_file(c.out_path, result_to_json(result));
  out << "re-imported " << result.elements.size() << " elements (" << to_string(result.ctx.kind)
      << ", set " << result.set_kind << ")\n";
  return 0;
}

int run_cache_clear(const RunConfig& c, std::ostream& out) {
  if (c.cache_dir.empty()) throw std::invalid_argument("cache-clear: no cache directory given");
  ClosureDiskCache(c.cache_dir).clear();
  out << "cleared closure cache in " << c.cache_dir << "\n";
  return 0;
}

}  // namespace

std::string RunConfig::finalize() {
  if (!config_path.empty()) {
    // config presets fill only fields still at their defaults; flags win
    // because the caller applies them after loading the file (see tools/).
    try {
      auto kv = parse_config_file(config_path);
      if (cache_dir.empty() && kv.count("cache_dir")) cache_dir = kv["cache_dir"];
      if (seed == 1 && kv.count("seed")) seed = std::stoull(kv["seed"]);
      if (band == 3 && kv.count("band")) band = std::stoi(kv["band"]);
      if (max_m == -1 && kv.count("max_m")) max_m = std::stoi(kv["max_m"]);
      if (jobs == 1 && kv.count("jobs")) jobs = std::stoi(kv["jobs"]);
    } catch (const std::exception& e) {
      return std::string("config file error: ") + e.what();
    }
  }
  if (cache_dir.empty())
    if (const char* env = std::getenv("ADMSET_CACHE_DIR")) cache_dir = env;

  switch (command) {
    case Command::Enumerate: {
      if (group != "GL" && group != "GSP" && group != "GU")
        return "enumerate: --group must be GL, GSP, or GU";
      if (rank < 1) return "enumerate: --m/--N must be positive";
      if (I.empty()) return "enumerate: --I must be a nonempty index list";
      if (!contains(kSetKinds, set_kind)) return "enumerate: unknown --set \"" + set_kind + "\"";
      const int m = rank;
      if (set_kind == "spin" && group != "GU") return "enumerate: spin sets exist for GU only";
      if ((set_kind == "wedge" || set_kind == "spin")) {
        if (s < 0) return "enumerate: --s is required for wedge/spin";
        if (group == "GL") return "enumerate: wedge/spin sets exist for GSP/GU only";
        if (!mu.empty()) return "enumerate: --mu is not accepted for wedge/naive/spin";
      }
      if (set_kind == "naive") {
        if (group == "GL") return "enumerate: naive sets exist for GSP/GU only";
        if (s >= 0 || !mu.empty()) return "enumerate: naive takes neither --s nor --mu";
      }
      if (set_kind == "adm" || set_kind == "perm-kr") {
        if (group == "GL" && mu.empty()) return "enumerate: GL " + set_kind + " requires --mu";
        if (group == "GL" && s >= 0) return "enumerate: --s applies to GSP/GU only";
        if (group != "GL" && mu.empty() == (s < 0))
          return "enumerate: give exactly one of --mu and --s for " + set_kind;
      }
      if (s >= 0 && group != "GL" && s > m) return "enumerate: need 0 <= s <= m";
      break;
    }
    case Command::Verify:
      if (!contains(kClaims, claim)) return "verify: unknown --claim \"" + claim + "\"";
      if (max_m < 1 && max_m != -1) return "verify: --m must be positive";
      if (jobs < 1) return "verify: --jobs must be positive";
      break;
    case Command::Export:
      if (in_path.empty()) return "export: --in is required";
      if (csv_path.empty() && out_path.empty()) return "export: give --csv and/or --out";
      break;
    case Command::CacheClear:
      if (cache_dir.empty())
        return "cache-clear: set --cache-dir (or ADMSET_CACHE_DIR / config file)";
      break;
  }
  return "";
}

int run(RunConfig config, std::ostream& out, std::ostream& err) {
  const std::string usage_error = config.finalize();
  if (!usage_error.empty()) {
    err << "error: " << usage_error << "\n";
    return 2;
  }
  try {
    switch (config.command) {
      case Command::Enumerate: return run_enumerate(config, out);
      case Command::Verify: return run_verify(config, out);
      case Command::Export: return run_export(config, out);
      case Command::CacheClear: return run_cache_clear(config, out);
    }
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace admset::cli
