#include "slcs/image.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "png_io.hpp"
#include "slcs/errors.hpp"
#include "slcs/space_graph.hpp"

namespace slcs {

RasterImage::RasterImage(std::size_t width, std::size_t height, Rgb fill) : width_(width), height_(height) {
    if (width == 0 || height == 0) throw std::invalid_argument("image dimensions must be positive");
    data_.resize(3 * width * height);
    for (std::size_t i = 0; i < pixel_count(); ++i) set_pixel(i, fill);
}

RasterImage::RasterImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> rgb)
    : width_(width), height_(height), data_(std::move(rgb)) {
    if (width == 0 || height == 0) throw std::invalid_argument("image dimensions must be positive");
    if (data_.size() != 3 * width * height)
        throw std::invalid_argument("expected " + std::to_string(3 * width * height) + " pixel bytes, got " +
                                    std::to_string(data_.size()));
}

ClosureModel image_to_model(const RasterImage& img, Adjacency adjacency,
                            const std::map<std::string, ColorPredicate>& predicates) {
    const std::size_t w = img.width();
    const std::size_t h = img.height();
    if (w == 0 || h == 0) throw std::invalid_argument("image dimensions must be positive");

    // Offsets in increasing target-id order, so the edge list comes out sorted.
    static constexpr int kFour[4][2] = {{0, -1}, {-1, 0}, {1, 0}, {0, 1}};
    static constexpr int kEight[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}};
    const int (*offsets)[2] = adjacency == Adjacency::Four ? kFour : kEight;
    const int offset_count = adjacency == Adjacency::Four ? 4 : 8;

    std::vector<Edge> edges;
    edges.reserve(w * h * static_cast<std::size_t>(offset_count));
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            const auto from = static_cast<PointId>(y * w + x);
            for (int k = 0; k < offset_count; ++k) {
                const auto nx = static_cast<std::ptrdiff_t>(x) + offsets[k][0];
                const auto ny = static_cast<std::ptrdiff_t>(y) + offsets[k][1];
                if (nx < 0 || ny < 0 || nx >= static_cast<std::ptrdiff_t>(w) || ny >= static_cast<std::ptrdiff_t>(h))
                    continue;
                edges.emplace_back(from, static_cast<PointId>(static_cast<std::size_t>(ny) * w +
                                                              static_cast<std::size_t>(nx)));
            }
        }
    }

    Valuation valuation;
    for (const auto& [letter, predicate] : predicates) {
        PointSet set(img.pixel_count());
        for (std::size_t i = 0; i < img.pixel_count(); ++i)
            if (predicate.matches(img.pixel(i))) set.insert(static_cast<PointId>(i));
        valuation.emplace(letter, std::move(set));
    }

    std::vector<std::string> names;
    names.reserve(img.pixel_count());
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) names.push_back(std::to_string(x) + "," + std::to_string(y));

    return ClosureModel(SpaceGraph(img.pixel_count(), edges), std::move(valuation), std::move(names));
}

RasterImage paint(const RasterImage& img, const PointSet& s, Rgb color) {
    if (s.universe() != img.pixel_count()) throw UniverseMismatch(img.pixel_count(), s.universe());
    RasterImage out = img;
    for (PointId x : s) out.set_pixel(x, color);
    return out;
}

std::string encode_ppm(const RasterImage& img) {
    std::string out = "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    out.append(img.bytes().begin(), img.bytes().end());
    return out;
}

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    std::size_t number(const char* what) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
            if (value > (std::size_t{1} << 24)) throw LoadError(std::string("PPM ") + what + " too large");
            ++pos_;
        }
        if (pos_ == start) throw LoadError(std::string("PPM header: expected ") + what);
        return value;
    }

    std::size_t pos() const { return pos_; }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

} // namespace

RasterImage decode_ppm(std::string_view bytes) {
    if (!bytes.starts_with("P6")) throw LoadError("not a binary PPM (missing P6 magic)");
    HeaderReader header(bytes.substr(2));
    const std::size_t width = header.number("width");
    const std::size_t height = header.number("height");
    const std::size_t maxval = header.number("maxval");
    if (maxval != 255) throw LoadError("only 8-bit PPM (maxval 255) is supported");
    if (width == 0 || height == 0) throw LoadError("PPM has a zero dimension");
    // Exactly one whitespace byte separates the header from the raster.
    const std::size_t data_start = 2 + header.pos() + 1;
    const std::size_t expected = 3 * width * height;
    if (data_start > bytes.size() || bytes.size() - data_start < expected)
        throw LoadError("PPM raster truncated");
    std::vector<std::uint8_t> rgb(bytes.begin() + static_cast<std::ptrdiff_t>(data_start),
                                  bytes.begin() + static_cast<std::ptrdiff_t>(data_start + expected));
    return RasterImage(width, height, std::move(rgb));
}

namespace {
bool has_extension(const std::filesystem::path& path, std::string_view ext) {
    std::string e = path.extension().string();
    for (auto& c : e) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return e == ext;
}
} // namespace

RasterImage read_image(const std::filesystem::path& path) {
    if (has_extension(path, ".png")) return read_png(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open image '" + path.string() + "'");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_ppm(bytes);
}

void write_image(const RasterImage& img, const std::filesystem::path& path) {
    if (has_extension(path, ".png")) {
        write_png(img, path);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write image '" + path.string() + "'");
    const std::string bytes = encode_ppm(img);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("failed writing image '" + path.string() + "'");
}

} // namespace slcs
