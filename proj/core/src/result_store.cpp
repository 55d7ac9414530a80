#include "awtk/result_store.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "awtk/errors.hpp"
#include "awtk/verify.hpp"
#include "awtk/version.hpp"

namespace awtk {

namespace {

using json = nlohmann::json;

bool ends_mid_line(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in || in.tellg() <= 0) return false;
  in.seekg(-1, std::ios::end);
  return in.get() != '\n';
}

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string describe(const ResultRecord& r) {
  return std::string(to_string(r.kind)) + " n=" + std::to_string(r.n) +
         " k=" + std::to_string(r.k) + (r.unitary ? " unitary" : "");
}

}  // namespace

ResultRecord make_record(const GroupInstance& g, int k, const SolverOutcome& outcome) {
  ResultRecord r;
  r.kind = g.kind();
  r.n = g.order();
  r.k = k;
  r.unitary = outcome.unitary;
  r.aw_value = outcome.aw_value;
  r.witness = outcome.witness;
  r.stats.nodes_explored = outcome.nodes_explored;
  r.stats.elapsed_seconds = std::chrono::duration<double>(outcome.elapsed).count();
  r.version = std::string(version());
  r.timestamp = utc_now();
  return r;
}

std::optional<std::string> verify_record(const ResultRecord& r) {
  if (r.k < 3) return "k must be at least 3";
  if (!r.witness) return "missing witness";
  const Coloring& w = *r.witness;
  if (w.group().kind() != r.kind || w.group().order() != r.n) {
    return "witness is over " + w.group().name();
  }
  if (w.palette() != r.aw_value - 1) {
    return "witness has " + std::to_string(w.palette()) + " colors, expected " +
           std::to_string(r.aw_value - 1);
  }
  if (!is_rainbow_free(w, r.k)) return "witness contains a rainbow progression";
  if (r.unitary && !w.is_unitary()) return "witness is not unitary";
  return std::nullopt;
}

std::string to_json_line(const ResultRecord& r) {
  json j = {
      {"schema_version", kStoreSchemaVersion},
      {"kind", std::string(to_string(r.kind))},
      {"n", r.n},
      {"k", r.k},
      {"unitary", r.unitary},
      {"aw", r.aw_value},
      {"witness", r.witness ? json(to_text(*r.witness)) : json(nullptr)},
      {"stats", {{"nodes_explored", r.stats.nodes_explored},
                 {"elapsed_seconds", r.stats.elapsed_seconds}}},
      {"version", r.version},
      {"timestamp", r.timestamp},
  };
  return j.dump();
}

ResultRecord parse_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kStoreSchemaVersion) {
      throw std::invalid_argument("unsupported schema_version");
    }
    ResultRecord r;
    r.kind = parse_group_kind(j.at("kind").get<std::string>());
    r.n = j.at("n").get<long long>();
    r.k = j.at("k").get<int>();
    r.unitary = j.at("unitary").get<bool>();
    r.aw_value = j.at("aw").get<int>();
    if (!j.at("witness").is_null()) {
      r.witness = parse_coloring(j.at("witness").get<std::string>());
    }
    r.stats.nodes_explored = j.at("stats").at("nodes_explored").get<std::uint64_t>();
    r.stats.elapsed_seconds = j.at("stats").at("elapsed_seconds").get<double>();
    r.version = j.at("version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad record: ") + e.what());
  }
}

ResultStore::ResultStore(std::filesystem::path path, bool verify_on_read)
    : path_(std::move(path)), verify_on_read_(verify_on_read) {
  load();
}

void ResultStore::load() {
  std::ifstream in(path_);
  if (!in) return;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) {
      // A writer may be mid-append; only complete lines count.
      issues_.push_back({line_no, "incomplete trailing line"});
      break;
    }
    std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      ResultRecord r = parse_json_line(line);
      if (verify_on_read_) {
        if (auto why = verify_record(r)) {
          issues_.push_back({line_no, "rejected " + describe(r) + ": " + *why});
          continue;
        }
      }
      Key key{r.kind, r.n, r.k, r.unitary};
      auto [it, inserted] = index_.emplace(key, r);
      if (!inserted && it->second.aw_value != r.aw_value) {
        issues_.push_back({line_no, "conflicting value for " + describe(r)});
      }
    } catch (const std::exception& e) {
      issues_.push_back({line_no, e.what()});
    }
  }
}

void ResultStore::put(const ResultRecord& record) {
  if (auto why = verify_record(record)) {
    throw IntegrityError("refusing " + describe(record) + ": " + *why);
  }
  std::lock_guard lock(mutex_);
  Key key{record.kind, record.n, record.k, record.unitary};
  if (auto it = index_.find(key); it != index_.end()) {
    if (it->second.aw_value != record.aw_value) {
      throw IntegrityError("store has aw=" + std::to_string(it->second.aw_value) +
                           " for " + describe(record) + ", refusing aw=" +
                           std::to_string(record.aw_value));
    }
    return;
  }
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path_.string() + " for append");
  std::string line = to_json_line(record) + "\n";
  if (ends_mid_line(path_)) line.insert(line.begin(), '\n');
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
  if (!out) throw std::runtime_error("write to " + path_.string() + " failed");
  index_.emplace(key, record);
}

std::optional<ResultRecord> ResultStore::get(GroupKind kind, long long n, int k,
                                             bool unitary) const {
  std::lock_guard lock(mutex_);
  auto it = index_.find(Key{kind, n, k, unitary});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ResultRecord> ResultStore::records() const {
  std::lock_guard lock(mutex_);
  std::vector<ResultRecord> out;
  out.reserve(index_.size());
  for (const auto& [key, r] : index_) out.push_back(r);
  return out;
}

std::vector<StoreIssue> ResultStore::issues() const {
  std::lock_guard lock(mutex_);
  return issues_;
}

std::size_t ResultStore::size() const {
  std::lock_guard lock(mutex_);
  return index_.size();
}

std::filesystem::path ResultStore::resolve_path(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("AW_CACHE"); env && *env) return env;
  return "aw-cache.jsonl";
}

}  // namespace awtk
