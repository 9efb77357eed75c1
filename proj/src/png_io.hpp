#pragma once

#include <filesystem>

#include "slcs/image.hpp"

namespace slcs {

RasterImage read_png(const std::filesystem::path& path);
void write_png(const RasterImage& img, const std::filesystem::path& path);

} // namespace slcs
