#pragma once

#include <string_view>

#include "slcs/formula.hpp"

namespace slcs {

/// Parses the ASCII formula syntax:
///
///     formula := until
///     until   := or (("U" | "R") until)?
///     or      := and ("|" and)*
///     and     := unary ("&" unary)*
///     unary   := ("!" | "N" | "I" | "B" | "Bi" | "Bp" | "G" | "F") unary | atom
///     atom    := "top" | "bot" | IDENT | color | "(" formula ")"
///     color   := "color" "(" range "," range "," range ")"
///     range   := INT (".." INT)?
///
/// IDENT is `[A-Za-z_][A-Za-z0-9_-]*` minus the reserved words. Color atoms are
/// normalized to ColorPredicate::atom_name(). Throws ParseError on bad input.
Formula parse_formula(std::string_view text);

} // namespace slcs
