#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dillema::util {

/// SHA-256 hex digest (lowercase). Used for cache keys, content addresses
/// and provenance hashes.
std::string sha256_hex(std::span<const uint8_t> bytes);
std::string sha256_hex(std::string_view text);

// Deterministic 64-bit hash for seed derivation. FNV-1a over the field
// bytes with a length-prefixed framing so ("ab","c") != ("a","bc"),
// finished with a splitmix64 avalanche. Stable across platforms and runs;
// never replace with std::hash.
class StableHasher {
public:
    StableHasher& add(std::string_view text);
    StableHasher& add(uint64_t value);
    StableHasher& add(int64_t value) { return add(static_cast<uint64_t>(value)); }
    uint64_t finish() const;

private:
    uint64_t state_ = 0xcbf29ce484222325ull; // FNV offset basis
    void mix_byte(uint8_t b);
};

uint64_t stable_hash64(std::string_view a);
uint64_t stable_hash64(uint64_t a, uint64_t b);
uint64_t stable_hash64(uint64_t a, std::string_view b);
uint64_t stable_hash64(uint64_t a, std::string_view b, uint64_t c);
uint64_t stable_hash64(uint64_t a, std::string_view b, std::string_view c);

} // namespace dillema::util
