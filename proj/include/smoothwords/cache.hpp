#pragma once

// On-disk cache of enumeration levels: one file per (alphabet, length) with
// newline-separated words in comma form, plus a manifest naming the tool
// version. Anything unreadable or stale is treated as a miss.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "smoothwords/census.hpp"
#include "smoothwords/word.hpp"

#ifndef SMOOTHWORDS_VERSION
#define SMOOTHWORDS_VERSION "dev"
#endif

namespace smoothwords {

inline constexpr const char* kCacheEnvVar = "SMOOTHWORDS_CACHE";
inline constexpr const char* kDefaultCacheDir = ".smoothcache";

/// Flag wins over environment, which wins over the default.
inline std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
  return kDefaultCacheDir;
}

class DirectoryCache : public LevelCache {
 public:
  explicit DirectoryCache(std::filesystem::path root) : root_(std::move(root)) {}

  const std::filesystem::path& root() const noexcept { return root_; }

  std::filesystem::path level_path(const Alphabet& ab, std::size_t length) const {
    return root_ / ab.text() / (std::to_string(length) + ".txt");
  }

  std::optional<std::vector<Word>> load(const Alphabet& ab, std::size_t length) override {
    if (!manifest_matches()) return std::nullopt;
    std::ifstream in(level_path(ab, length));
    if (!in) return std::nullopt;
    std::vector<Word> words;
    std::string line;
    try {
      while (std::getline(in, line)) {
        Word w = parse_word_text(line);
        if (w.size() != length) return std::nullopt;
        words.push_back(std::move(w));
      }
    } catch (const error&) {
      return std::nullopt;
    }
    return words;
  }

  void store(const Alphabet& ab, std::size_t length, const std::vector<Word>& words) override {
    std::error_code ec;
    if (!manifest_matches()) {
      std::filesystem::remove_all(root_, ec);
      std::filesystem::create_directories(root_, ec);
      std::ostringstream m;
      m << manifest_text();
      if (!write_atomic(root_ / "manifest.txt", m.str())) return;
    }
    std::filesystem::create_directories(root_ / ab.text(), ec);
    std::ostringstream body;
    for (const Word& w : words) body << to_text(w, TextForm::comma) << '\n';
    write_atomic(level_path(ab, length), body.str());
  }

 private:
  static std::string manifest_text() {
    return std::string("smoothwords-cache\nformat 1\nversion ") + SMOOTHWORDS_VERSION + "\n";
  }

  bool manifest_matches() const {
    std::ifstream in(root_ / "manifest.txt");
    if (!in) return false;
    std::ostringstream s;
    s << in.rdbuf();
    return s.str() == manifest_text();
  }

  // Write to a sibling temp file, then rename over the target.
  static bool write_atomic(const std::filesystem::path& target, const std::string& body) {
    static std::atomic<unsigned> counter{0};
    auto tmp = target;
    tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
           "." + std::to_string(counter++);
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) return false;
      out << body;
      if (!out.flush()) return false;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      return false;
    }
    return true;
  }

  std::filesystem::path root_;
};

}  // namespace smoothwords
