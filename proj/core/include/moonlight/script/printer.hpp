#pragma once

#include <string>

#include "moonlight/script/ast.hpp"

namespace moonlight::script {

/// Canonical text form. Re-parsing the output yields an equal AST.
std::string to_string(const Expr& e);
std::string to_string(const Formula& f);
std::string to_string(const Script& s);

}  // namespace moonlight::script
