#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "moonlight/error.hpp"
#include "moonlight/script/ast.hpp"

namespace moonlight::script {

enum class DiagnosticKind {
  Lexical,
  Syntax,
  DuplicateName,
  UnknownIdentifier,
  SpatialWithoutSpace,
  CyclicReference,
  ArityMismatch,
  InvalidInterval,
  UnknownFormula,
  MissingArgument,
  ExtraArgument,
  IllTypedArgument,
};

std::string_view to_string(DiagnosticKind kind) noexcept;

struct Diagnostic {
  DiagnosticKind kind = DiagnosticKind::Syntax;
  SourcePos pos;
  std::string token;  ///< offending token or name, may be empty
  std::string message;

  /// "line:col: kind: message"
  std::string to_string() const;
};

class ScriptError : public Error {
 public:
  explicit ScriptError(std::vector<Diagnostic> diagnostics);
  explicit ScriptError(Diagnostic diagnostic);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace moonlight::script
