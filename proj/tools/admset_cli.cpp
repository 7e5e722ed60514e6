#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "admset/cli.hpp"

namespace {

std::vector<int> parse_index_list(const std::string& csv) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(csv);
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"admissible/permissible alcove sets for GL, GSp, and odd ramified GU"};
  app.require_subcommand(1);

  admset::cli::RunConfig cfg;
  std::string I_csv, mu_csv;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cfg.cache_dir, "closure cache directory");
    sub->add_option("--config", cfg.config_path, "key = value config file");
    sub->add_option("--out", cfg.out_path, "write JSON here");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate one coset set");
  enumerate->add_option("--group", cfg.group, "GL | GSP | GU")->required();
  enumerate->add_option("--m,--N", cfg.rank, "rank (m for GSP/GU, N for GL)")->required();
  enumerate->add_option("--s", cfg.s, "wedge/spin parameter (0 <= s <= m)");
  enumerate->add_option("--I", I_csv, "level indices, e.g. 0,1")->required();
  enumerate->add_option("--mu", mu_csv, "explicit cocharacter, e.g. 2,1,1,0");
  enumerate->add_option("--set", cfg.set_kind, "adm | perm-kr | wedge | naive | spin")->required();
  enumerate->add_option("--csv", cfg.csv_path, "write CSV here");
  add_common(enumerate);

  CLI::App* verify = app.add_subcommand("verify", "machine-check the set identities");
  verify->add_option("--claim", cfg.claim, "equivalence | intersect | perm-adm | steinberg | basic | negative-control | all")
      ->required();
  verify->add_option("--m", cfg.max_m, "largest rank to check");
  verify->add_option("--s", cfg.s, "restrict to one s");
  verify->add_option("--I", I_csv, "restrict to one level set");
  verify->add_option("--mu", mu_csv, "fixed cocharacter for intersect");
  verify->add_option("--count", cfg.mu_count, "random cocharacters per rank");
  verify->add_option("--band", cfg.band, "entry band [0,band] for random cocharacters");
  verify->add_option("--max-len", cfg.max_len, "length cutoff for steinberg");
  verify->add_option("--seed", cfg.seed, "base RNG seed");
  verify->add_option("--jobs", cfg.jobs, "parallel verification tasks");
  verify->add_flag("!--no-timing", cfg.timing, "omit elapsed_ms from the JSON export");
  add_common(verify);

  CLI::App* exp = app.add_subcommand("export", "re-import a JSON result and export it");
  exp->add_option("--in", cfg.in_path, "JSON result to read")->required();
  exp->add_option("--csv", cfg.csv_path, "write CSV here");
  add_common(exp);

  CLI::App* clear = app.add_subcommand("cache-clear", "drop the on-disk closure cache");
  add_common(clear);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (enumerate->parsed()) cfg.command = admset::cli::Command::Enumerate;
  if (verify->parsed()) cfg.command = admset::cli::Command::Verify;
  if (exp->parsed()) cfg.command = admset::cli::Command::Export;
  if (clear->parsed()) cfg.command = admset::cli::Command::CacheClear;

  try {
    if (!I_csv.empty()) cfg.I = parse_index_list(I_csv);
    if (!mu_csv.empty())
      for (int v : parse_index_list(mu_csv)) cfg.mu.push_back(v);
  } catch (const std::exception&) {
    std::cerr << "error: malformed index list\n";
    return 2;
  }

  return admset::cli::run(std::move(cfg), std::cout, std::cerr);
}
