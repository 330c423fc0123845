#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace dellac {

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "DELLAC_CACHE_DIR";

struct CacheKey {
  std::string command;
  std::string family;
  int n = 0;
  std::string format;

  /// "<command>-<family>-n<N>-<format>-v<version>"; the code version is
  /// part of the name, so a version bump never hits old entries.
  std::string stem() const;
};

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// Stores command outputs as <stem>.out next to <stem>.sha256. A load whose
/// content no longer matches its recorded hash is treated as a miss.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  /// Directory from DELLAC_CACHE_DIR, or nullopt when unset/empty.
  static std::optional<std::filesystem::path> default_dir();

  std::optional<std::string> load(const CacheKey& key) const;
  void store(const CacheKey& key, std::string_view content) const;

  std::filesystem::path content_path(const CacheKey& key) const;
  std::filesystem::path hash_path(const CacheKey& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace dellac
