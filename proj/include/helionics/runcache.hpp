#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace helionics {

using OrderedJson = nlohmann::ordered_json;

/// FNV-1a over the canonical key material; identifies (kind, Z-set,
/// tolerances, version) for cache lookups and the run manifest.
std::uint64_t fnv1a(std::string_view s);

std::string hash_hex(std::uint64_t h);

/// One JSON document per computed row, written atomically
/// (temp-then-rename). The directory is created on first store.
class RowCache {
public:
    explicit RowCache(std::filesystem::path dir);

    std::optional<OrderedJson> load(const std::string& key) const;
    void store(const std::string& key, const OrderedJson& doc) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

/// Cache directory resolution: explicit flag > HELIONICS_CACHE > default.
std::filesystem::path resolve_cache_dir(const std::string& flag_value);

} // namespace helionics
