#include "png_io.hpp"

#include <png.h>

#include <cstring>

#include "slcs/errors.hpp"

namespace slcs {

namespace {

struct PngImage {
    png_image image;

    PngImage() {
        std::memset(&image, 0, sizeof image);
        image.version = PNG_IMAGE_VERSION;
    }
    ~PngImage() { png_image_free(&image); }
    PngImage(const PngImage&) = delete;
    PngImage& operator=(const PngImage&) = delete;
};

} // namespace

RasterImage read_png(const std::filesystem::path& path) {
    PngImage png;
    if (png_image_begin_read_from_file(&png.image, path.c_str()) == 0)
        throw LoadError("cannot read PNG '" + path.string() + "': " + png.image.message);
    png.image.format = PNG_FORMAT_RGB;
    if (png.image.width == 0 || png.image.height == 0) throw LoadError("PNG has a zero dimension");
    std::vector<std::uint8_t> rgb(PNG_IMAGE_SIZE(png.image));
    if (png_image_finish_read(&png.image, nullptr, rgb.data(), 0, nullptr) == 0)
        throw LoadError("cannot decode PNG '" + path.string() + "': " + png.image.message);
    return RasterImage(png.image.width, png.image.height, std::move(rgb));
}

void write_png(const RasterImage& img, const std::filesystem::path& path) {
    PngImage png;
    png.image.width = static_cast<png_uint_32>(img.width());
    png.image.height = static_cast<png_uint_32>(img.height());
    png.image.format = PNG_FORMAT_RGB;
    if (png_image_write_to_file(&png.image, path.c_str(), 0, img.bytes().data(), 0, nullptr) == 0)
        throw Error("cannot write PNG '" + path.string() + "': " + png.image.message);
}

} // namespace slcs
