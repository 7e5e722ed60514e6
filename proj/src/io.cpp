#include "admset/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace admset {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

GroupContext context_from(const std::string& group, int rank) {
  if (group == "GL") return GroupContext::gl(rank);
  if (group == "GSP") return GroupContext::gsp(rank);
  if (group == "GU") return GroupContext::gu(rank);
  throw std::invalid_argument("unknown group \"" + group + "\"");
}

}  // namespace

std::string result_to_json(const EnumerationResult& r) {
  json j;
  j["group"] = to_string(r.ctx.kind);
  j["m_or_N"] = r.ctx.rank;
  if (!r.mu.empty()) j["mu"] = r.mu;
  if (r.s >= 0) j["s"] = r.s;
  j["I"] = r.level.indices;
  j["set"] = r.set_kind;
  j["cardinality"] = r.elements.size();
  std::vector<std::string> texts;
  texts.reserve(r.elements.size());
  for (const auto& w : r.elements) texts.push_back(canonical_text(w));
  j["elements"] = texts;
  return j.dump(2) + "\n";
}

EnumerationResult result_from_json(const std::string& text) {
  const json j = json::parse(text);
  EnumerationResult r{context_from(j.at("group").get<std::string>(), j.at("m_or_N").get<int>()),
                      j.at("set").get<std::string>(),
                      {},
                      -1,
                      {},
                      {}};
  if (j.contains("mu")) r.mu = j["mu"].get<Vec>();
  if (j.contains("s")) r.s = j["s"].get<int>();
  r.level = make_level(r.ctx, j.at("I").get<std::vector<int>>());
  std::vector<WeylElement> elems;
  for (const auto& t : j.at("elements")) elems.push_back(parse_element(r.ctx, t.get<std::string>()));
  r.elements = canonicalize(std::move(elems));
  if (r.elements.size() != j.at("cardinality").get<std::size_t>())
    throw std::invalid_argument("result_from_json: cardinality does not match element list");
  return r;
}

std::string result_to_csv(const EnumerationResult& r) {
  std::ostringstream os;
  os << "group,rank,s,I,set,cardinality,element\n";
  std::ostringstream level;
  for (std::size_t t = 0; t < r.level.indices.size(); ++t) {
    if (t) level << ",";
    level << r.level.indices[t];
  }
  for (const auto& w : r.elements) {
    os << to_string(r.ctx.kind) << "," << r.ctx.rank << ",";
    if (r.s >= 0) os << r.s;
    os << ",\"" << level.str() << "\"," << r.set_kind << "," << r.elements.size() << ",\""
       << canonical_text(w) << "\"\n";
  }
  return os.str();
}

std::string report_to_json(const VerificationReport& r, bool include_timing) {
  json j;
  j["claim"] = r.claim;
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["lhs_set"] = r.lhs_set;
  j["rhs_set"] = r.rhs_set;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  j["counterexample"] = r.counterexample;
  j["seed"] = r.seed;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& rs, bool include_timing) {
  std::string out = "[\n";
  for (std::size_t t = 0; t < rs.size(); ++t) {
    std::istringstream is(report_to_json(rs[t], include_timing));
    std::string line;
    while (std::getline(is, line)) out += "  " + line + "\n";
    if (t + 1 < rs.size()) {
      out.erase(out.find_last_not_of('\n') + 1);
      out += ",\n";
    }
  }
  out += "]\n";
  return out;
}

std::string face_to_json(const FaceOfTypeI& f) {
  json j;
  j["I"] = f.level.indices;
  j["d"] = f.d;
  json v = json::object();
  for (std::size_t t = 0; t < f.reps.size(); ++t) v[std::to_string(f.reps[t])] = f.v[t];
  j["v"] = v;
  return j.dump(2) + "\n";
}

FaceOfTypeI face_from_json(const GroupContext& ctx, const std::string& text) {
  const json j = json::parse(text);
  FaceOfTypeI f{ctx, make_level(ctx, j.at("I").get<std::vector<int>>()), {}, {},
                j.at("d").get<long long>()};
  f.reps = residue_reps(ctx, f.level);
  for (int r : f.reps) f.v.push_back(j.at("v").at(std::to_string(r)).get<Vec>());
  return f;
}

std::string witness_to_json(const SpinWitness& w) {
  json j;
  j["i"] = w.i;
  j["E_minus"] = w.E_minus;
  j["E_plus"] = w.E_plus;
  j["q"] = w.q;
  j["q_perp"] = w.q_perp;
  j["case"] = w.kase == SpinCase::SelfDual ? "SELF_DUAL" : "STRICT";
  j["sgn_minus"] = w.sgn_minus;
  j["sgn_plus"] = w.sgn_plus;
  j["satisfied"] = w.satisfied;
  return j.dump(2) + "\n";
}

ClosureDiskCache::ClosureDiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::optional<std::vector<std::string>> ClosureDiskCache::load(const std::string& key) const {
  const auto path = dir_ / (hex64(fnv1a64(key)) + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    auto elements = j.at("elements").get<std::vector<std::string>>();
    std::string payload;
    for (const auto& e : elements) payload += e + "\n";
    if (j.at("checksum").get<std::string>() != hex64(fnv1a64(payload)))
      return std::nullopt;  // corrupt entry: caller recomputes
    return elements;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void ClosureDiskCache::store(const std::string& key,
                             const std::vector<std::string>& element_texts) const {
  json j;
  j["key"] = key;
  j["elements"] = element_texts;
  std::string payload;
  for (const auto& e : element_texts) payload += e + "\n";
  j["checksum"] = hex64(fnv1a64(payload));
  const auto path = dir_ / (hex64(fnv1a64(key)) + ".json");
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

void ClosureDiskCache::clear() const {
  if (!std::filesystem::exists(dir_)) return;
  for (const auto& entry : std::filesystem::directory_iterator(dir_))
    if (entry.path().extension() == ".json") std::filesystem::remove(entry.path());
}

std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path) {
  std::map<std::string, std::string> out;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path.string());
  std::string line;
  auto trim = [](std::string s) {
    const char* ws = " \t\r\n";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    return s;
  };
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

}  // namespace admset
