#include "qlct/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <vector>

#include "qlct/errors.hpp"

namespace qlct {

namespace {

struct Rgb8 {
    int width = 0, height = 0;
    std::vector<unsigned char> pixels;  // rows of RGB triples

    unsigned char* row(int y) { return pixels.data() + static_cast<std::size_t>(y) * width * 3; }
    const unsigned char* row(int y) const { return pixels.data() + static_cast<std::size_t>(y) * width * 3; }
};

bool ends_with(const std::string& s, const std::string& suf) {
    if (s.size() < suf.size()) return false;
    std::string tail = s.substr(s.size() - suf.size());
    for (char& c : tail) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return tail == suf;
}

Rgb8 read_ppm(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("ppm: cannot open: " + path);
    std::string magic;
    is >> magic;
    if (magic != "P6") throw UnsupportedFormat("ppm: only binary P6 supported");
    auto next_int = [&is, &path]() {
        // skip whitespace and '#' comment lines
        int c = is.get();
        while (c == '#' || std::isspace(c)) {
            if (c == '#')
                while (c != '\n' && c != EOF) c = is.get();
            c = is.get();
        }
        int value = 0;
        while (std::isdigit(c)) {
            value = value * 10 + (c - '0');
            c = is.get();
        }
        if (!is && value == 0) throw IoError("ppm: truncated header in " + path);
        return value;
    };
    Rgb8 img;
    img.width = next_int();
    img.height = next_int();
    const int maxval = next_int();
    if (maxval != 255) throw UnsupportedFormat("ppm: only maxval 255 supported");
    img.pixels.resize(static_cast<std::size_t>(img.width) * img.height * 3);
    is.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
    if (!is) throw IoError("ppm: truncated pixel data in " + path);
    return img;
}

void write_ppm(const Rgb8& img, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("ppm: cannot open for writing: " + path);
    os << "P6\n" << img.width << " " << img.height << "\n255\n";
    os.write(reinterpret_cast<const char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
    if (!os) throw IoError("ppm: write failed: " + path);
}

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};

Rgb8 read_png(const std::string& path) {
    std::unique_ptr<std::FILE, FileCloser> fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("png: cannot open: " + path);
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("png: init failed");
    }
    Rgb8 img;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw UnsupportedFormat("png: decode failed: " + path);
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);
    img.width = static_cast<int>(png_get_image_width(png, info));
    img.height = static_cast<int>(png_get_image_height(png, info));
    const png_byte color = png_get_color_type(png, info);
    const png_byte depth = png_get_bit_depth(png, info);
    if (depth == 16) png_set_strip_16(png);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA) png_set_gray_to_rgb(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);
    if (png_get_rowbytes(png, info) != static_cast<std::size_t>(img.width) * 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw UnsupportedFormat("png: not expandable to 8-bit RGB: " + path);
    }
    img.pixels.resize(static_cast<std::size_t>(img.width) * img.height * 3);
    rows.resize(img.height);
    for (int y = 0; y < img.height; ++y) rows[y] = img.row(y);
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void write_png(const Rgb8& img, const std::string& path) {
    std::unique_ptr<std::FILE, FileCloser> fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("png: cannot open for writing: " + path);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw IoError("png: init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("png: encode failed: " + path);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.height; ++y)
        png_write_row(png, const_cast<png_bytep>(img.row(y)));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

Rgb8 load_rgb(const std::string& path) {
    if (ends_with(path, ".png")) return read_png(path);
    if (ends_with(path, ".ppm")) return read_ppm(path);
    throw UnsupportedFormat("image: expected .png or .ppm: " + path);
}

}  // namespace

Field2D image_to_field(const std::string& path) {
    const Rgb8 img = load_rgb(path);
    // x indexes columns, y rows; samples are pure quaternions R mu + G nu + B eta.
    Field2D f(GridSpec2D(img.width, img.height, 1.0, 1.0, true));
    for (int y = 0; y < img.height; ++y) {
        const unsigned char* r = img.row(y);
        for (int x = 0; x < img.width; ++x) {
            f.at(x, y) = {0.0, r[3 * x] / 255.0, r[3 * x + 1] / 255.0, r[3 * x + 2] / 255.0};
        }
    }
    return f;
}

void field_to_image(const Field2D& f, const std::string& path) {
    Rgb8 img;
    img.width = f.spec.nx;
    img.height = f.spec.ny;
    img.pixels.resize(static_cast<std::size_t>(img.width) * img.height * 3);
    auto to_byte = [](double c) {
        return static_cast<unsigned char>(std::lround(std::clamp(c, 0.0, 1.0) * 255.0));
    };
    for (int y = 0; y < img.height; ++y) {
        unsigned char* r = img.row(y);
        for (int x = 0; x < img.width; ++x) {
            const Quaternion& q = f.at(x, y);
            r[3 * x] = to_byte(q.x);
            r[3 * x + 1] = to_byte(q.y);
            r[3 * x + 2] = to_byte(q.z);
        }
    }
    if (ends_with(path, ".png"))
        write_png(img, path);
    else if (ends_with(path, ".ppm"))
        write_ppm(img, path);
    else
        throw UnsupportedFormat("image: expected .png or .ppm: " + path);
}

}  // namespace qlct
