#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "lin3/search.hpp"

namespace lin3 {

/// Class names used as the predicate part of table keys.
namespace classes {
inline constexpr std::string_view kSparsePaving = "sparse-paving";       // s(n, r)
inline constexpr std::string_view kSparsePavingX = "sparse-paving/x-free";  // s_X(n, 3)
inline constexpr std::string_view kPaving = "paving";                    // p(n, 3)
inline constexpr std::string_view kPavingX = "paving/x-free";            // p_X(n, 3)
inline constexpr std::string_view kRank3 = "matroid";                    // m(n, 3)
inline constexpr std::string_view kRank3X = "matroid/x-free";            // m_X(n, 3)
inline constexpr std::string_view kF = "f";                              // f(n), r = 3
inline constexpr std::string_view kRsMax = "rs-max";                     // rs(n), r = 3
}  // namespace classes

struct CountKey {
  int n = 0;
  int r = 0;
  std::string predicate;

  auto operator<=>(const CountKey&) const = default;
  std::string str() const;  // "sparse-paving(n=7,r=3)"
};

struct CountEntry {
  Count value;
  std::string provenance;  // exhaustive | composed | stable-set-count | extremal
};

/// Exact counts keyed by (n, r, predicate). Persisted as JSON lines, one
/// record per entry; files are appended to, and reloading tolerates repeated
/// identical records but rejects conflicting values for one key.
class CountsTable {
 public:
  /// Throws OutOfRange if the key already holds a different value.
  void put(const CountKey& key, const Count& value, std::string provenance);

  const CountEntry* find(const CountKey& key) const;
  /// MissingCount when absent.
  const Count& value(const CountKey& key) const;

  const std::map<CountKey, CountEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  static std::string record(const CountKey& key, const CountEntry& entry);
  std::string to_json_lines() const;
  static CountsTable from_json_lines(std::string_view text);

  static CountsTable load(const std::filesystem::path& path);
  /// Appends the record for `key` to `path`.
  void append(const std::filesystem::path& path, const CountKey& key) const;

 private:
  std::map<CountKey, CountEntry> entries_;
};

/// Fills s(n, r) for 0 <= r <= n, all n in [lo, hi].
void fill_sparse_paving(CountsTable& table, int lo, int hi, const SearchBudget& budget = {});

}  // namespace lin3
