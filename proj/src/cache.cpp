#include "dellac/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "dellac/version.hpp"

namespace dellac {

std::string CacheKey::stem() const {
  return command + "-" + family + "-n" + std::to_string(n) + "-" + format + "-v" + kVersion;
}

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw std::runtime_error("SHA-256 computation failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> ResultCache::default_dir() {
  const char* env = std::getenv(kCacheDirEnv);
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

std::filesystem::path ResultCache::content_path(const CacheKey& key) const {
  return dir_ / (key.stem() + ".out");
}

std::filesystem::path ResultCache::hash_path(const CacheKey& key) const {
  return dir_ / (key.stem() + ".sha256");
}

namespace {

std::optional<std::string> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_atomically(const std::filesystem::path& p, std::string_view data) {
  auto tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("short write to cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace

std::optional<std::string> ResultCache::load(const CacheKey& key) const {
  auto content = slurp(content_path(key));
  auto recorded = slurp(hash_path(key));
  if (!content || !recorded) return std::nullopt;
  while (!recorded->empty() && (recorded->back() == '\n' || recorded->back() == '\r'))
    recorded->pop_back();
  if (sha256_hex(*content) != *recorded) return std::nullopt;
  return content;
}

void ResultCache::store(const CacheKey& key, std::string_view content) const {
  std::filesystem::create_directories(dir_);
  write_atomically(content_path(key), content);
  write_atomically(hash_path(key), sha256_hex(content) + "\n");
}

}  // namespace dellac
