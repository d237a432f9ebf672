#pragma once

#include <string_view>
#include <vector>

#include "moonlight/script/ast.hpp"
#include "moonlight/script/diagnostics.hpp"

namespace moonlight::script {

/// Static checks: identifiers resolve, spatial operators need a space
/// declaration, literal intervals are well formed, formula references have
/// the right arity and are acyclic. Returns every problem found.
std::vector<Diagnostic> type_check(const Script& script);

/// A script that passed type_check.
class CheckedScript {
 public:
  /// Throws ScriptError carrying every diagnostic.
  explicit CheckedScript(Script script);

  const Script& script() const noexcept { return script_; }
  const Script* operator->() const noexcept { return &script_; }

 private:
  Script script_;
};

/// parse_script followed by CheckedScript.
CheckedScript load_script(std::string_view text);

/// Replaces parameters with `args` and inlines formula references. The
/// result has no free names. Throws ScriptError (UnknownFormula,
/// MissingArgument, ExtraArgument, IllTypedArgument, InvalidInterval).
FormulaPtr instantiate_formula(const CheckedScript& script, std::string_view name,
                               const FormulaArgs& args);

}  // namespace moonlight::script
