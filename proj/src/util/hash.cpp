#include "dillema/util/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace dillema::util {

std::string sha256_hex(std::span<const uint8_t> bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256: EVP_Digest failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::string sha256_hex(std::string_view text) {
    return sha256_hex(std::span<const uint8_t>(
        reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

namespace {

constexpr uint64_t kFnvPrime = 0x100000001b3ull;

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

void StableHasher::mix_byte(uint8_t b) {
    state_ ^= b;
    state_ *= kFnvPrime;
}

StableHasher& StableHasher::add(std::string_view text) {
    add(static_cast<uint64_t>(text.size()));
    for (char c : text) mix_byte(static_cast<uint8_t>(c));
    return *this;
}

StableHasher& StableHasher::add(uint64_t value) {
    for (int i = 0; i < 8; ++i) mix_byte(static_cast<uint8_t>(value >> (i * 8)));
    return *this;
}

uint64_t StableHasher::finish() const {
    return splitmix64(state_);
}

uint64_t stable_hash64(std::string_view a) {
    return StableHasher().add(a).finish();
}
uint64_t stable_hash64(uint64_t a, uint64_t b) {
    return StableHasher().add(a).add(b).finish();
}
uint64_t stable_hash64(uint64_t a, std::string_view b) {
    return StableHasher().add(a).add(b).finish();
}
uint64_t stable_hash64(uint64_t a, std::string_view b, uint64_t c) {
    return StableHasher().add(a).add(b).add(c).finish();
}
uint64_t stable_hash64(uint64_t a, std::string_view b, std::string_view c) {
    return StableHasher().add(a).add(b).add(c).finish();
}

} // namespace dillema::util
