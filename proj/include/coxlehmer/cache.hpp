#ifndef COXLEHMER_CACHE_HPP
#define COXLEHMER_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "coxlehmer/bruhat.hpp"
#include "coxlehmer/coxeter.hpp"

namespace coxlehmer {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheEnvVar = "COXLEHMER_CACHE";

/// On-disk store of enumerated groups and their Bruhat covers, one JSON file
/// per system: a header {format, type, rank, m, size} and arrays of canonical
/// forms, lengths and lower covers. Files with another format version or a
/// mismatching header are ignored and rewritten.
class PosetCache {
 public:
  explicit PosetCache(std::filesystem::path dir);
  /// The given directory if nonempty, else $COXLEHMER_CACHE, else none.
  static std::optional<PosetCache> resolve(const std::string& dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path file_for(const CoxeterSystem& system) const;

  /// Loads from disk when possible; otherwise enumerates, builds and stores.
  BruhatPtr bruhat(const CoxeterSystem& system);
  /// True when the last bruhat() call was served from disk.
  bool last_hit() const noexcept { return last_hit_; }

 private:
  std::filesystem::path dir_;
  bool last_hit_ = false;
};

/// Enumerates and builds, going through the cache when one is given.
BruhatPtr load_bruhat(const CoxeterSystem& system, PosetCache* cache);

}  // namespace coxlehmer

#endif  // COXLEHMER_CACHE_HPP
