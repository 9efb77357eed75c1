#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slcs/checker.hpp"
#include "slcs/color.hpp"
#include "slcs/formula.hpp"
#include "slcs/image.hpp"

namespace slcs {

struct LetBinding {
    std::string name;
    Formula formula;
    std::size_t line = 0;
};

struct PaintCommand {
    Rgb color;
    Formula formula;
    std::string source;  // formula text as written
    std::size_t line = 0;
};

struct SaveCommand {
    std::filesystem::path path;
    std::size_t line = 0;
};

using Statement = std::variant<LetBinding, PaintCommand, SaveCommand>;

/// Image-analysis script:
///
///     # comment
///     let wall = color(0..40, 0..40, 0..40);
///     paint "#FF0000" start & ((!wall) R exit);
///     save "out.ppm";
///
/// Formulas use the parse_formula grammar; identifiers naming an earlier `let`
/// are replaced by the bound formula.
struct Script {
    std::vector<Statement> statements;
};

/// Throws ParseError; the message carries the script line.
Script parse_script(std::string_view text);

struct ScriptOptions {
    Adjacency adjacency = Adjacency::Four;
    CheckOptions check;
    /// Check paint formulas on worker threads; painting itself stays in statement order.
    bool parallel = true;
};

struct PaintReport {
    std::string source;
    Rgb color;
    std::size_t line = 0;
    std::size_t painted = 0;
    CheckStats stats;
};

struct ScriptResult {
    RasterImage image;
    std::vector<PaintReport> paints;
    std::vector<std::filesystem::path> saved;
};

/// Runs the script over `input`. Paints apply in order onto a working copy, so later
/// paints win on overlapping pixels. Throws SemanticError for undefined names,
/// unknown letters, duplicate bindings, or a paint after a save.
ScriptResult run_script(const RasterImage& input, const Script& script, const ScriptOptions& options = {});

/// Replaces atoms named by `bindings` (in order) with their formulas.
Formula resolve_bindings(const Formula& f, const std::vector<LetBinding>& bindings);

} // namespace slcs
