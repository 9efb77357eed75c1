#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>

#include "slcs/model.hpp"
#include "slcs/point_set.hpp"

namespace slcs::testing {

inline std::filesystem::path fixture_path(std::string_view name) {
    return std::filesystem::path(SLCS_FIXTURES) / name;
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline ClosureModel load_color_grid() { return load_model(read_text(fixture_path("color_grid.json"))); }

inline PointSet named(const ClosureModel& model, std::initializer_list<std::string_view> names) {
    PointSet s(model.point_count());
    for (auto n : names) {
        const auto id = model.find(n);
        if (!id) throw std::invalid_argument("no point named " + std::string(n));
        s.insert(*id);
    }
    return s;
}

} // namespace slcs::testing
