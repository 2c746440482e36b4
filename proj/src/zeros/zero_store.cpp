#include <algorithm>
#include <filesystem>

#include "zerosum/zeros.hpp"

namespace zerosum {

ZeroStore::ZeroStore(std::optional<std::string> cache_dir) : dir_(std::move(cache_dir)) {}

std::string ZeroStore::path_for(const std::string& name) const {
  return (std::filesystem::path(*dir_) / name).string();
}

ZeroTable& ZeroStore::table(Family family, double nu, int min_count) {
  const auto key = std::make_pair(family, nu);
  auto it = tables_.find(key);
  if (it == tables_.end()) {
    Entry entry{ZeroTable{family, nu, {}, kDefaultRealZeroTol}, 0};
    if (dir_) {
      // Accept any cached prefix; extend_zeros continues from it.
      if (auto cached = cache_load(family, nu, 0, path_for(cache_file_name(family, nu)))) {
        entry.table = std::move(*cached);
        entry.persisted = entry.table.count();
      }
    }
    if (entry.table.zeros.empty()) {
      entry.table = family == Family::BesselJ ? find_bessel_zeros(Order{nu}, std::max(min_count, 1))
                                              : find_struve_zeros(Order{nu}, std::max(min_count, 1));
    }
    it = tables_.emplace(key, std::move(entry)).first;
  }
  extend_zeros(it->second.table, std::max(min_count, 1));
  return it->second.table;
}

const ComplexZeroSet& ZeroStore::hn(int n) {
  auto it = hn_.find(n);
  if (it == hn_.end()) {
    std::optional<ComplexZeroSet> cached;
    if (dir_) cached = cache_load_hn(n, path_for(cache_file_name_hn(n)));
    const bool from_cache = cached.has_value();
    ComplexZeroSet set = from_cache ? std::move(*cached) : find_hn_zeros(n);
    it = hn_.emplace(n, std::make_pair(std::move(set), from_cache)).first;
  }
  return it->second.first;
}

void ZeroStore::flush() {
  if (!dir_) return;
  for (auto& [key, entry] : tables_) {
    if (entry.table.count() > entry.persisted) {
      cache_store(entry.table, path_for(cache_file_name(key.first, key.second)));
      entry.persisted = entry.table.count();
    }
  }
  for (auto& [n, item] : hn_) {
    if (!item.second) {
      cache_store(item.first, path_for(cache_file_name_hn(n)));
      item.second = true;
    }
  }
}

}  // namespace zerosum
