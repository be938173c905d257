#include "lin3/counts_table.hpp"

#include <fstream>

#include "json.hpp"
#include "lin3/error.hpp"
#include "lin3/io.hpp"

namespace lin3 {

std::string CountKey::str() const {
  return predicate + "(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")";
}

void CountsTable::put(const CountKey& key, const Count& value, std::string provenance) {
  auto [it, fresh] = entries_.try_emplace(key, CountEntry{value, provenance});
  if (!fresh && it->second.value != value) {
    throw Error(Errc::OutOfRange, "conflicting values for " + key.str() + ": " +
                                      it->second.value.str() + " vs " + value.str());
  }
}

const CountEntry* CountsTable::find(const CountKey& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

const Count& CountsTable::value(const CountKey& key) const {
  if (const auto* e = find(key)) return e->value;
  throw Error(Errc::MissingCount, "no count for " + key.str());
}

std::string CountsTable::record(const CountKey& key, const CountEntry& entry) {
  nlohmann::ordered_json j;
  j["n"] = key.n;
  j["r"] = key.r;
  j["predicate"] = key.predicate;
  j["value"] = entry.value.str();
  j["provenance"] = entry.provenance;
  return j.dump();
}

std::string CountsTable::to_json_lines() const {
  std::string out;
  for (const auto& [key, entry] : entries_) out += record(key, entry) + "\n";
  return out;
}

CountsTable CountsTable::from_json_lines(std::string_view text) {
  CountsTable table;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      const CountKey key{j.at("n").get<int>(), j.at("r").get<int>(),
                         j.at("predicate").get<std::string>()};
      table.put(key, Count(j.at("value").get<std::string>()),
                j.value("provenance", std::string("unknown")));
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::Parse, "counts table line " + std::to_string(number) + ": " + e.what());
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const Error*>(&e)) throw;
      throw Error(Errc::Parse, "counts table line " + std::to_string(number) + ": " + e.what());
    }
  }
  return table;
}

CountsTable CountsTable::load(const std::filesystem::path& path) {
  return from_json_lines(io::read_file(path));
}

void CountsTable::append(const std::filesystem::path& path, const CountKey& key) const {
  const auto* entry = find(key);
  if (!entry) throw Error(Errc::MissingCount, "no count for " + key.str());
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) throw Error(Errc::Parse, "cannot append to " + path.string());
  out << record(key, *entry) << '\n';
}

void fill_sparse_paving(CountsTable& table, int lo, int hi, const SearchBudget& budget) {
  for (int n = lo; n <= hi; ++n)
    for (int r = 0; r <= n; ++r)
      table.put({n, r, std::string(classes::kSparsePaving)}, count_sparse_paving(n, r, budget),
                "stable-set-count");
}

}  // namespace lin3
