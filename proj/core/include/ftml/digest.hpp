#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace ftml {

// FNV-1a, used for provenance digests of input files. Not cryptographic.
class Fnv1a {
public:
    void update(const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            hash_ ^= p[i];
            hash_ *= 0x100000001b3ULL;
        }
    }
    void update(std::string_view s) { update(s.data(), s.size()); }
    std::uint64_t value() const { return hash_; }
    std::string hex() const;

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::string digest_bytes(std::string_view bytes);
std::string digest_file(const std::filesystem::path& path);

}  // namespace ftml
