#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace slcs {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

/// Inclusive range for one 8-bit channel.
struct ChannelRange {
    std::uint8_t lo = 0;
    std::uint8_t hi = 255;

    bool contains(std::uint8_t v) const noexcept { return lo <= v && v <= hi; }
    bool operator==(const ChannelRange&) const = default;
};

/// Axis-aligned box in RGB space; used as an atomic proposition over pixels.
struct ColorPredicate {
    ChannelRange r;
    ChannelRange g;
    ChannelRange b;

    bool matches(Rgb c) const noexcept { return r.contains(c.r) && g.contains(c.g) && b.contains(c.b); }
    bool operator==(const ColorPredicate&) const = default;

    /// Canonical atom spelling, e.g. `color(0..10,0..10,200..255)`.
    std::string atom_name() const;
};

/// Recognizes the canonical atom spelling produced by ColorPredicate::atom_name().
std::optional<ColorPredicate> parse_color_atom(std::string_view name);

/// Parses `#RRGGBB`. Returns nullopt on anything else.
std::optional<Rgb> parse_hex_color(std::string_view text);

} // namespace slcs
