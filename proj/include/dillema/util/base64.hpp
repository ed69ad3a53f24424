#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dillema::util {

std::string base64_encode(std::span<const uint8_t> bytes);

/// Strict RFC 4648 decode (no whitespace, '=' padding required).
/// Throws std::invalid_argument on malformed input.
std::vector<uint8_t> base64_decode(std::string_view text);

} // namespace dillema::util
