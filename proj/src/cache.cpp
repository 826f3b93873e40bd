#include "staircase/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace stair {

namespace {

std::string fnv64_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<std::string> cache_dir() {
    const char* dir = std::getenv("STAIRCASE_CACHE_DIR");
    if (!dir || !*dir)
        return std::nullopt;
    return std::string(dir);
}

} // namespace

bool cache_enabled() { return cache_dir().has_value(); }

std::optional<std::string> cache_lookup(const std::string& key_material) {
    auto dir = cache_dir();
    if (!dir)
        return std::nullopt;
    std::filesystem::path path = std::filesystem::path(*dir) / (fnv64_hex(key_material) + ".bin");
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string blob = ss.str();

    auto nl = blob.find('\n');
    if (nl == std::string::npos)
        return std::nullopt;
    std::size_t key_len = 0;
    try {
        key_len = std::stoul(blob.substr(0, nl));
    } catch (...) {
        return std::nullopt;
    }
    if (blob.size() < nl + 1 + key_len)
        return std::nullopt;
    if (blob.compare(nl + 1, key_len, key_material) != 0)
        return std::nullopt; // hash collision, treat as a miss
    return blob.substr(nl + 1 + key_len);
}

void cache_store(const std::string& key_material, const std::string& payload) {
    auto dir = cache_dir();
    if (!dir)
        return;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    std::filesystem::path path = std::filesystem::path(*dir) / (fnv64_hex(key_material) + ".bin");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        return;
    out << key_material.size() << '\n' << key_material << payload;
}

} // namespace stair
