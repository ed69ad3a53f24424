#include "dillema/image/image.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>

#include <jerror.h>
#include <jpeglib.h>

namespace dillema::image {

namespace {

struct MemReader {
    const uint8_t* data;
    size_t size;
    size_t pos;
};

void png_read_from_mem(png_structp png, png_bytep out, png_size_t count) {
    auto* r = static_cast<MemReader*>(png_get_io_ptr(png));
    if (r->pos + count > r->size) {
        png_error(png, "unexpected end of PNG stream");
    }
    std::memcpy(out, r->data + r->pos, count);
    r->pos += count;
}

void png_write_to_vec(png_structp png, png_bytep data, png_size_t count) {
    auto* v = static_cast<std::vector<uint8_t>*>(png_get_io_ptr(png));
    v->insert(v->end(), data, data + count);
}

void png_flush_noop(png_structp) {}

bool is_png(std::span<const uint8_t> bytes) {
    static const uint8_t sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    return bytes.size() >= 8 && std::memcmp(bytes.data(), sig, 8) == 0;
}

bool is_jpeg(std::span<const uint8_t> bytes) {
    return bytes.size() >= 3 && bytes[0] == 0xff && bytes[1] == 0xd8 && bytes[2] == 0xff;
}

// libpng reader wrapper with error trampoline
class PngReader {
public:
    explicit PngReader(std::span<const uint8_t> bytes) : reader_{bytes.data(), bytes.size(), 0} {
        png_ = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, on_error, on_warning);
        if (!png_) throw DecodeError("png: failed to allocate read struct");
        info_ = png_create_info_struct(png_);
        if (!info_) {
            png_destroy_read_struct(&png_, nullptr, nullptr);
            throw DecodeError("png: failed to allocate info struct");
        }
        png_set_read_fn(png_, &reader_, png_read_from_mem);
    }

    ~PngReader() { png_destroy_read_struct(&png_, &info_, nullptr); }

    PngReader(const PngReader&) = delete;
    PngReader& operator=(const PngReader&) = delete;

    png_structp png_ = nullptr;
    png_infop info_ = nullptr;

private:
    MemReader reader_;

    [[noreturn]] static void on_error(png_structp, png_const_charp msg) {
        throw DecodeError(std::string("png: ") + (msg ? msg : "decode error"));
    }
    static void on_warning(png_structp, png_const_charp) {}
};

class PngWriter {
public:
    PngWriter() {
        png_ = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, on_error, on_warning);
        if (!png_) throw DecodeError("png: failed to allocate write struct");
        info_ = png_create_info_struct(png_);
        if (!info_) {
            png_destroy_write_struct(&png_, nullptr);
            throw DecodeError("png: failed to allocate info struct");
        }
        png_set_write_fn(png_, &out_, png_write_to_vec, png_flush_noop);
    }

    ~PngWriter() { png_destroy_write_struct(&png_, &info_); }

    PngWriter(const PngWriter&) = delete;
    PngWriter& operator=(const PngWriter&) = delete;

    png_structp png_ = nullptr;
    png_infop info_ = nullptr;
    std::vector<uint8_t> out_;

private:
    [[noreturn]] static void on_error(png_structp, png_const_charp msg) {
        throw DecodeError(std::string("png: ") + (msg ? msg : "encode error"));
    }
    static void on_warning(png_structp, png_const_charp) {}
};

Image decode_png_rgb(std::span<const uint8_t> bytes) {
    PngReader rd(bytes);
    png_read_info(rd.png_, rd.info_);

    png_uint_32 w = 0, h = 0;
    int bit_depth = 0, color_type = 0;
    png_get_IHDR(rd.png_, rd.info_, &w, &h, &bit_depth, &color_type, nullptr, nullptr, nullptr);

    // Normalize everything to 8-bit RGB
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(rd.png_);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(rd.png_);
    if (png_get_valid(rd.png_, rd.info_, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(rd.png_);
    if (bit_depth == 16) png_set_strip_16(rd.png_);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(rd.png_);
    png_set_strip_alpha(rd.png_);
    png_read_update_info(rd.png_, rd.info_);

    if (png_get_rowbytes(rd.png_, rd.info_) != static_cast<size_t>(w) * 3) {
        throw DecodeError("png: unexpected row size after RGB normalization");
    }

    Image img;
    img.width = static_cast<int>(w);
    img.height = static_cast<int>(h);
    img.rgb.resize(static_cast<size_t>(w) * h * 3);
    std::vector<png_bytep> rows(h);
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = img.rgb.data() + static_cast<size_t>(y) * w * 3;
    png_read_image(rd.png_, rows.data());
    png_read_end(rd.png_, nullptr);
    return img;
}

struct JpegErrorMgr {
    jpeg_error_mgr base;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, mgr->message);
    std::longjmp(mgr->jump, 1);
}

Image decode_jpeg_rgb(std::span<const uint8_t> bytes) {
    jpeg_decompress_struct cinfo{};
    JpegErrorMgr err{};
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;

    Image img;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError(std::string("jpeg: ") + err.message);
    }
    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    img.width = static_cast<int>(cinfo.output_width);
    img.height = static_cast<int>(cinfo.output_height);
    img.rgb.resize(img.pixel_count() * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        uint8_t* row = img.rgb.data() + static_cast<size_t>(cinfo.output_scanline) * img.width * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return img;
}

} // namespace

Image decode_image(std::span<const uint8_t> bytes) {
    if (is_png(bytes)) return decode_png_rgb(bytes);
    if (is_jpeg(bytes)) return decode_jpeg_rgb(bytes);
    throw DecodeError("unrecognized image format (expected PNG or JPEG)");
}

Image load_image(const std::filesystem::path& path) {
    auto bytes = read_file_bytes(path);
    try {
        return decode_image(bytes);
    } catch (const DecodeError& e) {
        throw DecodeError(path.string() + ": " + e.what());
    }
}

IndexedImage decode_indexed_png(std::span<const uint8_t> bytes) {
    if (!is_png(bytes)) throw DecodeError("indexed decode: not a PNG");
    PngReader rd(bytes);
    png_read_info(rd.png_, rd.info_);

    png_uint_32 w = 0, h = 0;
    int bit_depth = 0, color_type = 0;
    png_get_IHDR(rd.png_, rd.info_, &w, &h, &bit_depth, &color_type, nullptr, nullptr, nullptr);

    if (color_type != PNG_COLOR_TYPE_PALETTE && color_type != PNG_COLOR_TYPE_GRAY) {
        throw DecodeError("indexed decode: PNG must be palette or grayscale");
    }
    if (bit_depth < 8) {
        png_set_packing(rd.png_); // unpack 1/2/4-bit indices to one byte each
    } else if (bit_depth == 16) {
        throw DecodeError("indexed decode: 16-bit depth not supported");
    }
    png_read_update_info(rd.png_, rd.info_);

    if (png_get_rowbytes(rd.png_, rd.info_) != static_cast<size_t>(w)) {
        throw DecodeError("indexed decode: unexpected row size");
    }

    IndexedImage img;
    img.width = static_cast<int>(w);
    img.height = static_cast<int>(h);
    img.indices.resize(static_cast<size_t>(w) * h);
    std::vector<png_bytep> rows(h);
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = img.indices.data() + static_cast<size_t>(y) * w;
    png_read_image(rd.png_, rows.data());
    png_read_end(rd.png_, nullptr);
    return img;
}

IndexedImage load_indexed_png(const std::filesystem::path& path) {
    auto bytes = read_file_bytes(path);
    try {
        return decode_indexed_png(bytes);
    } catch (const DecodeError& e) {
        throw DecodeError(path.string() + ": " + e.what());
    }
}

std::vector<uint8_t> encode_png(const Image& img) {
    if (img.width <= 0 || img.height <= 0 || img.rgb.size() != img.pixel_count() * 3) {
        throw DecodeError("encode_png: inconsistent image buffer");
    }
    PngWriter wr;
    png_set_IHDR(wr.png_, wr.info_, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(wr.png_, wr.info_);
    for (int y = 0; y < img.height; ++y) {
        png_write_row(wr.png_, const_cast<png_bytep>(img.px(0, y)));
    }
    png_write_end(wr.png_, nullptr);
    return std::move(wr.out_);
}

std::vector<uint8_t> encode_png_gray8(int width, int height, std::span<const uint8_t> pixels) {
    if (width <= 0 || height <= 0 || pixels.size() != static_cast<size_t>(width) * height) {
        throw DecodeError("encode_png_gray8: inconsistent buffer");
    }
    PngWriter wr;
    png_set_IHDR(wr.png_, wr.info_, width, height, 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(wr.png_, wr.info_);
    for (int y = 0; y < height; ++y) {
        png_write_row(wr.png_, const_cast<png_bytep>(pixels.data() + static_cast<size_t>(y) * width));
    }
    png_write_end(wr.png_, nullptr);
    return std::move(wr.out_);
}

std::vector<uint8_t> encode_png_gray1(int width, int height, std::span<const uint8_t> bits) {
    if (width <= 0 || height <= 0 || bits.size() != static_cast<size_t>(width) * height) {
        throw DecodeError("encode_png_gray1: inconsistent buffer");
    }
    PngWriter wr;
    png_set_IHDR(wr.png_, wr.info_, width, height, 1, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(wr.png_, wr.info_);
    size_t rowbytes = (static_cast<size_t>(width) + 7) / 8;
    std::vector<uint8_t> row(rowbytes);
    for (int y = 0; y < height; ++y) {
        std::fill(row.begin(), row.end(), 0);
        for (int x = 0; x < width; ++x) {
            if (bits[static_cast<size_t>(y) * width + x]) {
                row[x / 8] |= static_cast<uint8_t>(0x80u >> (x % 8));
            }
        }
        png_write_row(wr.png_, row.data());
    }
    png_write_end(wr.png_, nullptr);
    return std::move(wr.out_);
}

std::vector<uint8_t> encode_png_indexed(const IndexedImage& img, std::span<const Rgb> palette) {
    if (img.width <= 0 || img.height <= 0 ||
        img.indices.size() != static_cast<size_t>(img.width) * img.height) {
        throw DecodeError("encode_png_indexed: inconsistent buffer");
    }
    if (palette.empty() || palette.size() > 256) {
        throw DecodeError("encode_png_indexed: palette must have 1..256 entries");
    }
    PngWriter wr;
    png_set_IHDR(wr.png_, wr.info_, img.width, img.height, 8, PNG_COLOR_TYPE_PALETTE,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    std::vector<png_color> colors(palette.size());
    for (size_t i = 0; i < palette.size(); ++i) {
        colors[i].red = palette[i].r;
        colors[i].green = palette[i].g;
        colors[i].blue = palette[i].b;
    }
    png_set_PLTE(wr.png_, wr.info_, colors.data(), static_cast<int>(colors.size()));
    png_write_info(wr.png_, wr.info_);
    for (int y = 0; y < img.height; ++y) {
        png_write_row(wr.png_,
                      const_cast<png_bytep>(img.indices.data() + static_cast<size_t>(y) * img.width));
    }
    png_write_end(wr.png_, nullptr);
    return std::move(wr.out_);
}

std::vector<uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DecodeError("cannot open file: " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw WriteError("cannot open file for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw WriteError("short write: " + path.string());
}

} // namespace dillema::image
