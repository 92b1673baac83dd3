#include "helionics/runcache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace helionics {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

RowCache::RowCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<OrderedJson> RowCache::load(const std::string& key) const {
    const auto path = dir_ / (key + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        OrderedJson doc = OrderedJson::parse(in);
        return doc;
    } catch (const std::exception&) {
        return std::nullopt; // treat a corrupt entry as a miss
    }
}

void RowCache::store(const std::string& key, const OrderedJson& doc) const {
    std::filesystem::create_directories(dir_);
    const auto path = dir_ / (key + ".json");
    // unique temp name so concurrent writers of one key cannot interleave
    static std::atomic<unsigned> counter{0};
    const auto tmp = dir_ / (key + ".tmp" + std::to_string(::getpid()) + "-" +
                             std::to_string(counter.fetch_add(1)));
    {
        std::ofstream out(tmp);
        out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("HELIONICS_CACHE")) {
        if (env[0] != '\0') return env;
    }
    return std::filesystem::path(".helionics-cache");
}

} // namespace helionics
