#pragma once

#include "dillema/util/errors.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace dillema::image {

class DecodeError : public Error {
public:
    explicit DecodeError(const std::string& what) : Error(what) {}
};

/// 8-bit RGB raster, row-major, 3 bytes per pixel.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> rgb;

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
    uint8_t* px(int x, int y) { return rgb.data() + (static_cast<size_t>(y) * width + x) * 3; }
    const uint8_t* px(int x, int y) const { return rgb.data() + (static_cast<size_t>(y) * width + x) * 3; }
    bool operator==(const Image&) const = default;
};

/// Raw palette/gray indices of an indexed image; values are class ids.
struct IndexedImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> indices;

    uint8_t at(int x, int y) const { return indices[static_cast<size_t>(y) * width + x]; }
    bool operator==(const IndexedImage&) const = default;
};

struct Rgb {
    uint8_t r = 0, g = 0, b = 0;
};

// Decoding. Format sniffed from magic bytes (PNG or JFIF/JPEG).
Image decode_image(std::span<const uint8_t> bytes);
Image load_image(const std::filesystem::path& path);

// Indexed decode keeps raw palette indices (8-bit palette PNG) or gray
// values (8-bit grayscale PNG) instead of expanding to RGB.
IndexedImage decode_indexed_png(std::span<const uint8_t> bytes);
IndexedImage load_indexed_png(const std::filesystem::path& path);

// Encoding
std::vector<uint8_t> encode_png(const Image& img);
std::vector<uint8_t> encode_png_gray8(int width, int height, std::span<const uint8_t> pixels);
/// 1-bit grayscale PNG; any nonzero input bit renders as white (255).
std::vector<uint8_t> encode_png_gray1(int width, int height, std::span<const uint8_t> bits);
std::vector<uint8_t> encode_png_indexed(const IndexedImage& img, std::span<const Rgb> palette);

std::vector<uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const uint8_t> bytes);

} // namespace dillema::image
