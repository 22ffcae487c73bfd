#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace ctxmon {

// FNV-1a 64-bit, used for artifact cross-linking (not security).
inline uint64_t fnv1a64(std::string_view bytes, uint64_t seed = 0xcbf29ce484222325ULL) {
    uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string digest_hex(std::string_view bytes);
std::string digest_file(const std::filesystem::path& path);

} // namespace ctxmon
