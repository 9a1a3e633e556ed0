#pragma once

#include <string>

namespace gammaq {

inline constexpr int kCacheSchemaVersion = 1;

struct CacheLoad {
    bool loaded = false;     // tables were verified and installed
    std::string message;     // human-readable reason when not loaded
};

/// Load Bernoulli/Euler tables from a versioned JSON file and seed the
/// in-process memo tables. A missing file is not an error; a corrupt or
/// mismatched file is reported and ignored (the tables rebuild on demand).
CacheLoad load_sequence_cache(const std::string& path);

/// Persist the current memo tables. Returns false when the path is not
/// writable; computation proceeds in memory either way.
bool store_sequence_cache(const std::string& path);

} // namespace gammaq
