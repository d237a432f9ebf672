#pragma once

#include <string_view>

#include "moonlight/script/ast.hpp"
#include "moonlight/script/diagnostics.hpp"

namespace moonlight::script {

/// Parses a monitor script. Throws ScriptError on lexical or syntax errors
/// and on duplicate declarations.
///
/// Formula precedence, tightest first:
///   prefix operators (!, eventually, globally, once, historically,
///   escape, somewhere, everywhere)
///   until / since / reach (left-associative)
///   &
///   |
///   => (right-associative)
/// Braces group formulas; parentheses hold either an atomic comparison or a
/// grouped formula.
Script parse_script(std::string_view text);

/// Parses a single formula against the declarations of `context`.
/// Identifiers listed in `params` are treated as formula parameters.
FormulaPtr parse_formula(std::string_view text, const Script& context,
                         const std::vector<FormulaParam>& params = {});

}  // namespace moonlight::script
