#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "awtk/coloring.hpp"
#include "awtk/group.hpp"
#include "awtk/solver.hpp"

namespace awtk {

inline constexpr int kStoreSchemaVersion = 1;

struct SolverStats {
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
  friend bool operator==(const SolverStats&, const SolverStats&) = default;
};

struct ResultRecord {
  GroupKind kind = GroupKind::Interval;
  long long n = 0;
  int k = 3;
  bool unitary = false;
  int aw_value = 0;
  std::optional<Coloring> witness;
  SolverStats stats;
  std::string version;
  std::string timestamp;  // ISO 8601, UTC
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// Record for a finished solver call, stamped with this build's version and
/// the current time.
ResultRecord make_record(const GroupInstance& g, int k, const SolverOutcome& outcome);

/// Why a record cannot be trusted, or nullopt if its witness checks out:
/// right group, aw_value-1 colors, rainbow-free, unitary when flagged.
std::optional<std::string> verify_record(const ResultRecord& r);

std::string to_json_line(const ResultRecord& r);
/// Throws std::invalid_argument on malformed input.
ResultRecord parse_json_line(std::string_view line);

struct StoreIssue {
  std::size_t line = 0;
  std::string message;
};

/// Append-only JSONL cache of solver results, keyed by (kind, n, k, unitary).
/// One writer per file; readers only ever see whole lines.
class ResultStore {
 public:
  /// Loads whatever is already at `path` (a missing file is an empty store).
  /// Unparseable lines, and lines whose witness fails verification when
  /// `verify_on_read` is set, are skipped and listed in issues().
  explicit ResultStore(std::filesystem::path path, bool verify_on_read = true);

  /// Re-verifies, then appends. Throws IntegrityError if the record fails
  /// verification or contradicts a stored aw value; an identical key with
  /// the same value is left alone.
  void put(const ResultRecord& record);

  std::optional<ResultRecord> get(GroupKind kind, long long n, int k, bool unitary) const;

  std::vector<ResultRecord> records() const;
  std::vector<StoreIssue> issues() const;
  std::size_t size() const;
  const std::filesystem::path& path() const noexcept { return path_; }

  /// --cache flag value if given, else $AW_CACHE, else ./aw-cache.jsonl.
  static std::filesystem::path resolve_path(const std::optional<std::string>& flag = {});

 private:
  using Key = std::tuple<GroupKind, long long, int, bool>;

  void load();

  std::filesystem::path path_;
  bool verify_on_read_;
  mutable std::mutex mutex_;
  std::map<Key, ResultRecord> index_;
  std::vector<StoreIssue> issues_;
};

}  // namespace awtk
