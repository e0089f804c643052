#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

namespace amtv {

struct CacheEntry {
  std::string key;  // word in text notation
  int digits = 0;
  std::string re;
  std::string im;
  long long timestamp = 0;
};

// Line-delimited JSON value store. Readers share, writers serialize.
class ValueCache {
 public:
  // A missing file is an empty cache; unreadable lines are skipped and counted.
  explicit ValueCache(std::string path);

  std::optional<CacheEntry> get(const std::string& key, int digits) const;
  // Stores only with strictly more digits than present. Throws CacheError on I/O failure.
  bool put(CacheEntry entry);
  // Rewrites the file with one line per key (atomic rename).
  void compact();

  std::size_t size() const;
  std::size_t skipped_lines() const { return skipped_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  mutable std::shared_mutex mu_;
  std::map<std::string, CacheEntry> entries_;
  std::size_t skipped_ = 0;
};

}  // namespace amtv
