#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include "json.hpp"

namespace plab::io {

inline constexpr int cache_format_version = 1;

struct CacheEntry {
    std::string key;
    json value;
    json timings = json::object();
    int format_version = cache_format_version;
};

inline std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// One file per key, one JSON line per file. Writers go through a temporary file and rename it
// into place, so readers see either nothing or a whole entry.
class Cache {
public:
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    // POSITROID_LAB_CACHE, or ./.plab-cache
    static Cache from_environment()
    {
        const char* env = std::getenv("POSITROID_LAB_CACHE");
        return Cache(env && *env ? env : ".plab-cache");
    }

    const std::filesystem::path& directory() const { return dir_; }

    std::filesystem::path path_for(const std::string& key) const
    {
        char name[32];
        std::snprintf(name, sizeof name, "%016llx.jsonl", static_cast<unsigned long long>(fnv1a(key)));
        return dir_ / name;
    }

    // Missing, unreadable, foreign-key and old-version entries all count as a miss.
    std::optional<CacheEntry> get(const std::string& key) const
    {
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        std::string line;
        if (!std::getline(in, line)) return std::nullopt;
        auto j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) return std::nullopt;
        if (j.value("formatVersion", -1) != cache_format_version) return std::nullopt;
        if (j.value("key", std::string()) != key || !j.contains("value")) return std::nullopt;
        CacheEntry e;
        e.key = key;
        e.value = j.at("value");
        if (j.contains("timings")) e.timings = j.at("timings");
        e.format_version = cache_format_version;
        return e;
    }

    void put(const CacheEntry& e) const
    {
        std::filesystem::create_directories(dir_);
        json j{{"formatVersion", e.format_version}, {"key", e.key}, {"value", e.value}, {"timings", e.timings}};
        static std::atomic<unsigned> counter{0};
        std::ostringstream tag;
        tag << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
        auto target = path_for(e.key);
        auto tmp = target;
        tmp += ".tmp." + tag.str();
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
            out << j.dump() << '\n';
            if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
        }
        std::filesystem::rename(tmp, target);
    }

private:
    std::filesystem::path dir_;
};

} // namespace plab::io
