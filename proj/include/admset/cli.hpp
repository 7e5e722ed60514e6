#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "admset/context.hpp"

namespace admset::cli {

enum class Command { Enumerate, Verify, Export, CacheClear };

/// Parsed invocation; validate() enforces the flag combinations before
/// dispatch (s only with wedge/spin/GU-adm, mu only with adm/perm-kr, ...).
struct RunConfig {
  Command command = Command::Enumerate;

  std::string group;          // GL | GSP | GU
  int rank = 0;               // m (GSp/GU) or N (GL)
  int s = -1;
  std::vector<int> I;
  std::vector<long long> mu;  // explicit cocharacter
  std::string set_kind;       // adm | perm-kr | wedge | naive | spin

  std::string claim;          // equivalence | intersect | perm-adm | steinberg | basic | all
  int max_m = -1;             // -1: per-claim default (3 for equivalence/perm-adm, else 2)
  int mu_count = 20;
  int band = 3;
  int max_len = 6;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool timing = true;

  std::string out_path;       // JSON output ("" = stdout only)
  std::string csv_path;
  std::string in_path;        // export input
  std::string cache_dir;      // "" = no disk cache
  std::string config_path;

  /// Returns an error message, or "" when valid.  Applies config-file
  /// presets (flags win) and the cache-dir environment override.
  std::string finalize();
};

/// Exit codes: 0 success/PASS, 1 FAIL (counterexample), 2 usage error,
/// 3 I/O error.
int run(RunConfig config, std::ostream& out, std::ostream& err);

}  // namespace admset::cli
