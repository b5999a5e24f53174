#pragma once

#include "symtoric/json_io.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace symtoric {

/// 64-bit FNV-1a of a byte string, rendered as 16 hex digits.
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Cache key for an operation on a fan: the operation name plus a hash of
/// the canonical fan serialization and the operation parameters, so any
/// change to rays, cones, or parameters yields a fresh entry.
inline std::string fan_cache_key(const Fan& fan, const std::string& op, const std::string& params) {
    std::string canonical = fan_to_json(fan).dump();
    return op + "-" + fnv1a_hex(canonical + "|" + op + "|" + params);
}

/// Byte-level result cache keyed by strings. Writes go to a temporary file
/// followed by an atomic rename, so concurrent readers never observe a
/// partial entry and reruns are byte-identical to the first run.
class DiskCache {
public:
    DiskCache() = default;
    explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }

    std::optional<std::string> load(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(path_for(key), std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream buf;
        buf << in.rdbuf();
        if (!in.good() && !in.eof()) return std::nullopt;
        return buf.str();
    }

    void store(const std::string& key, const std::string& bytes) const {
        if (!enabled()) return;
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        std::filesystem::path final_path = path_for(key);
        std::filesystem::path tmp = final_path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) return;  // cache is best effort
            out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
            if (!out.good()) {
                out.close();
                std::filesystem::remove(tmp, ec);
                return;
            }
        }
        std::filesystem::rename(tmp, final_path, ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }

private:
    std::filesystem::path path_for(const std::string& key) const { return dir_ / (key + ".json"); }

    std::filesystem::path dir_;
};

}  // namespace symtoric
