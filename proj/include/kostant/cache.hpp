#pragma once

// On-disk cache of exact counts: one JSON file keyed by count_key(kind, n, params).
// Records are stored in their report encoding, so a hit re-emits exactly the bytes a
// recomputation would produce.

#include <kostant/census.hpp>
#include <kostant/error.hpp>
#include <kostant/report.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace kostant {

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CountCache {
 public:
  explicit CountCache(std::filesystem::path path) : path_(std::move(path)) {
    if (!std::filesystem::exists(path_)) return;
    std::ifstream in(path_);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      const Json doc = Json::parse(buffer.str());
      if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_object()) {
        throw CacheError("cache file " + path_.string() + " has no records object");
      }
      records_ = doc["records"];
    } catch (const Json::parse_error& e) {
      throw CacheError("cache file " + path_.string() + " is not valid JSON: " + e.what());
    }
  }

  std::optional<Json> lookup(const std::string& key) const {
    if (!records_.contains(key)) return std::nullopt;
    const Json& record = records_[key];
    if (!record.is_object() || !record.contains("kind") || !record.contains("n") || !record.contains("params") || !record.contains("value")) {
      throw CacheError("cache record '" + key + "' is malformed");
    }
    return record;
  }

  void store(const std::string& key, const Json& record) {
    records_[key] = record;
    Json doc{{"version", 1}, {"records", records_}};
    const auto tmp = path_.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << doc.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path_);
  }

  std::size_t size() const noexcept { return records_.size(); }

 private:
  std::filesystem::path path_;
  Json records_ = Json::object();
};

/// Cached computation of an exact count. With `verify`, hits are recomputed and must
/// match byte for byte; a mismatch throws CacheError.
template <class Compute>
Json cached_count(CountCache* cache, const std::string& key, bool verify, Compute&& compute) {
  if (cache == nullptr) return to_json(compute());
  if (auto hit = cache->lookup(key)) {
    if (verify) {
      const Json fresh = to_json(compute());
      if (fresh.dump() != hit->dump()) throw CacheError("cache record '" + key + "' disagrees with recomputation");
    }
    return *hit;
  }
  Json record = to_json(compute());
  cache->store(key, record);
  return record;
}

}  // namespace kostant
