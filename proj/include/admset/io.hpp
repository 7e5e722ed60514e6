#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "admset/context.hpp"
#include "admset/element.hpp"
#include "admset/faces.hpp"
#include "admset/harness.hpp"
#include "admset/spin.hpp"
#include "admset/level.hpp"
#include "admset/permissibility.hpp"

namespace admset {

std::uint64_t fnv1a64(const std::string& data);

/// One enumerated set, ready for JSON/CSV export.
struct EnumerationResult {
  GroupContext ctx;
  std::string set_kind;  // adm | perm-kr | wedge | naive | spin
  Vec mu;                // empty when the set kind has no mu
  int s = -1;            // -1 when unused
  LevelStructure level;
  CosetSet elements;
};

std::string result_to_json(const EnumerationResult& r);
EnumerationResult result_from_json(const std::string& text);
std::string result_to_csv(const EnumerationResult& r);

std::string report_to_json(const VerificationReport& r, bool include_timing = true);
std::string reports_to_json(const std::vector<VerificationReport>& rs, bool include_timing = true);

/// Face schema: {"I": [...], "d": d, "v": {"<residue>": [...], ...}}.
std::string face_to_json(const FaceOfTypeI& f);
FaceOfTypeI face_from_json(const GroupContext& ctx, const std::string& text);

/// Witness schema: {"i", "E_minus", "E_plus", "q", "q_perp", "case",
/// "sgn_minus", "sgn_plus", "satisfied"}.
std::string witness_to_json(const SpinWitness& w);

/// One JSON object per closure, keyed by
/// (kind, rank, omega component, seed canonical text); payload checksummed,
/// corrupt files are ignored and recomputed.
class ClosureDiskCache {
 public:
  explicit ClosureDiskCache(std::filesystem::path dir);

  std::optional<std::vector<std::string>> load(const std::string& key) const;
  void store(const std::string& key, const std::vector<std::string>& element_texts) const;
  void clear() const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

/// key = value configuration (# comments, blank lines ignored).
std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path);

}  // namespace admset
