#include "forge/core/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>

namespace forge {

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

} // namespace

Image read_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    require(fp != nullptr, "cannot open png: " + path, ErrorCode::io);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    require(png != nullptr, "png_create_read_struct failed", ErrorCode::io);
    png_infop info = png_create_info_struct(png);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("png decode failed: " + path, ErrorCode::io);
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    png_uint_32 w = png_get_image_width(png, info);
    png_uint_32 h = png_get_image_height(png, info);
    int bit_depth = png_get_bit_depth(png, info);
    int color_type = png_get_color_type(png, info);

    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    std::vector<png_byte> rowbuf(png_get_rowbytes(png, info));
    Image img(static_cast<int>(h), static_cast<int>(w), 3);
    for (png_uint_32 y = 0; y < h; ++y) {
        png_read_row(png, rowbuf.data(), nullptr);
        for (png_uint_32 x = 0; x < w; ++x)
            for (int ch = 0; ch < 3; ++ch)
                img.at(static_cast<int>(y), static_cast<int>(x), ch) =
                    rowbuf[x * 3 + ch] / 255.0f;
    }
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void write_png(const std::string& path, const Image& img) {
    require(img.c == 3, "write_png: expected 3 channels");
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());

    FilePtr fp(std::fopen(path.c_str(), "wb"));
    require(fp != nullptr, "cannot write png: " + path, ErrorCode::io);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    require(png != nullptr, "png_create_write_struct failed", ErrorCode::io);
    png_infop info = png_create_info_struct(png);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error("png encode failed: " + path, ErrorCode::io);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, img.w, img.h, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_byte> rowbuf(static_cast<size_t>(img.w) * 3);
    for (int y = 0; y < img.h; ++y) {
        for (int x = 0; x < img.w; ++x)
            for (int ch = 0; ch < 3; ++ch) {
                float v = std::clamp(img.at(y, x, ch), 0.0f, 1.0f);
                rowbuf[x * 3 + ch] = static_cast<png_byte>(std::lround(v * 255.0f));
            }
        png_write_row(png, rowbuf.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void write_f32(const std::string& path, const Image& img) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(out.good(), "cannot write: " + path, ErrorCode::io);
    int32_t hdr[3] = {img.h, img.w, img.c};
    out.write(reinterpret_cast<const char*>(hdr), sizeof(hdr));
    out.write(reinterpret_cast<const char*>(img.data.data()),
              static_cast<std::streamsize>(img.data.size() * sizeof(float)));
    require(out.good(), "write failed: " + path, ErrorCode::io);
}

Image read_f32(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open: " + path, ErrorCode::io);
    int32_t hdr[3];
    in.read(reinterpret_cast<char*>(hdr), sizeof(hdr));
    require(in.good() && hdr[0] > 0 && hdr[1] > 0 && hdr[2] > 0, "bad f32 header: " + path,
            ErrorCode::io);
    Image img(hdr[0], hdr[1], hdr[2]);
    in.read(reinterpret_cast<char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size() * sizeof(float)));
    require(in.good(), "truncated f32 file: " + path, ErrorCode::io);
    return img;
}

} // namespace forge
