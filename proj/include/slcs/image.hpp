#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "slcs/color.hpp"
#include "slcs/model.hpp"
#include "slcs/point_set.hpp"

namespace slcs {

/// Row-major 8-bit RGB raster. Pixel (x, y) is point y * width + x.
class RasterImage {
public:
    RasterImage() = default;
    /// Throws std::invalid_argument for a zero dimension.
    RasterImage(std::size_t width, std::size_t height, Rgb fill = {});
    /// `rgb` holds 3 * width * height bytes.
    RasterImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> rgb);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return width_ * height_; }

    Rgb at(std::size_t x, std::size_t y) const { return pixel(y * width_ + x); }
    void set(std::size_t x, std::size_t y, Rgb c) { set_pixel(y * width_ + x, c); }

    Rgb pixel(std::size_t index) const {
        const std::uint8_t* p = &data_[3 * index];
        return {p[0], p[1], p[2]};
    }
    void set_pixel(std::size_t index, Rgb c) {
        std::uint8_t* p = &data_[3 * index];
        p[0] = c.r;
        p[1] = c.g;
        p[2] = c.b;
    }

    const std::vector<std::uint8_t>& bytes() const noexcept { return data_; }

    bool operator==(const RasterImage&) const = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<std::uint8_t> data_;
};

enum class Adjacency { Four = 4, Eight = 8 };

/// One point per pixel with symmetric edges to the in-bounds 4- or 8-neighbours;
/// each letter holds on the pixels its predicate matches. Point names are "x,y".
ClosureModel image_to_model(const RasterImage& img, Adjacency adjacency,
                            const std::map<std::string, ColorPredicate>& predicates);

/// Copy of `img` with exactly the pixels in `s` set to `color`.
RasterImage paint(const RasterImage& img, const PointSet& s, Rgb color);

/// Binary PPM: "P6\n<w> <h>\n255\n" followed by 3wh bytes.
std::string encode_ppm(const RasterImage& img);
/// Accepts P6 with maxval 255, tolerating '#' comments in the header. Throws LoadError.
RasterImage decode_ppm(std::string_view bytes);

/// Dispatches on extension: .ppm natively, .png through libpng. Throws LoadError.
RasterImage read_image(const std::filesystem::path& path);
void write_image(const RasterImage& img, const std::filesystem::path& path);

} // namespace slcs
