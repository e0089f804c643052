#include "amtv/cache.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include "json.hpp"

#include "amtv/errors.hpp"
#include "amtv/tvalue.hpp"

namespace amtv {

namespace {

nlohmann::json to_json(const CacheEntry& e) {
  return nlohmann::json{{"key", e.key}, {"digits", e.digits}, {"re", e.re}, {"im", e.im}, {"ts", e.timestamp}};
}

bool valid_key(const std::string& key) {
  try {
    return to_string(parse_word(key)) == key;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace

ValueCache::ValueCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      CacheEntry e;
      e.key = j.at("key").get<std::string>();
      e.digits = j.at("digits").get<int>();
      e.re = j.at("re").get<std::string>();
      e.im = j.at("im").get<std::string>();
      e.timestamp = j.value("ts", 0LL);
      if (!valid_key(e.key) || e.digits < 1) {
        ++skipped_;
        continue;
      }
      auto it = entries_.find(e.key);
      if (it == entries_.end() || it->second.digits < e.digits) entries_[e.key] = e;
    } catch (const std::exception&) {
      ++skipped_;
    }
  }
  if (in.bad()) throw CacheError("read failure on " + path_);
}

std::optional<CacheEntry> ValueCache::get(const std::string& key, int digits) const {
  std::shared_lock lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end() || it->second.digits < digits) return std::nullopt;
  return it->second;
}

bool ValueCache::put(CacheEntry entry) {
  if (!valid_key(entry.key)) throw CacheError("invalid cache key '" + entry.key + "'");
  std::unique_lock lock(mu_);
  auto it = entries_.find(entry.key);
  if (it != entries_.end() && it->second.digits >= entry.digits) return false;
  if (entry.timestamp == 0)
    entry.timestamp = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
  std::string line = to_json(entry).dump() + "\n";
  std::FILE* f = std::fopen(path_.c_str(), "ab");
  if (!f) throw CacheError("cannot open " + path_ + " for append");
  bool ok = std::fwrite(line.data(), 1, line.size(), f) == line.size();
  ok = (std::fflush(f) == 0) && ok;
  ok = (std::fclose(f) == 0) && ok;
  if (!ok) throw CacheError("write failure on " + path_);
  entries_[entry.key] = std::move(entry);
  return true;
}

void ValueCache::compact() {
  std::unique_lock lock(mu_);
  std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot open " + tmp);
    for (const auto& [k, e] : entries_) out << to_json(e).dump() << "\n";
    if (!out) throw CacheError("write failure on " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) throw CacheError("rename failed: " + ec.message());
}

std::size_t ValueCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

}  // namespace amtv
