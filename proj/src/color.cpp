#include "slcs/color.hpp"

#include <charconv>

namespace slcs {

namespace {

std::string range_text(ChannelRange c) {
    return std::to_string(c.lo) + ".." + std::to_string(c.hi);
}

bool read_byte(std::string_view& s, std::uint8_t& out) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == s.data() || value > 255) return false;
    out = static_cast<std::uint8_t>(value);
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return true;
}

bool consume(std::string_view& s, std::string_view token) {
    if (!s.starts_with(token)) return false;
    s.remove_prefix(token.size());
    return true;
}

bool read_range(std::string_view& s, ChannelRange& out) {
    return read_byte(s, out.lo) && consume(s, "..") && read_byte(s, out.hi) && out.lo <= out.hi;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

std::string ColorPredicate::atom_name() const {
    return "color(" + range_text(r) + "," + range_text(g) + "," + range_text(b) + ")";
}

std::optional<ColorPredicate> parse_color_atom(std::string_view name) {
    ColorPredicate p;
    if (!consume(name, "color(") || !read_range(name, p.r) || !consume(name, ",") ||
        !read_range(name, p.g) || !consume(name, ",") || !read_range(name, p.b) || !consume(name, ")") ||
        !name.empty())
        return std::nullopt;
    return p;
}

std::optional<Rgb> parse_hex_color(std::string_view text) {
    if (text.size() != 7 || text[0] != '#') return std::nullopt;
    std::uint8_t channels[3];
    for (int i = 0; i < 3; ++i) {
        const int hi = hex_digit(text[1 + 2 * i]);
        const int lo = hex_digit(text[2 + 2 * i]);
        if (hi < 0 || lo < 0) return std::nullopt;
        channels[i] = static_cast<std::uint8_t>(hi * 16 + lo);
    }
    return Rgb{channels[0], channels[1], channels[2]};
}

} // namespace slcs
