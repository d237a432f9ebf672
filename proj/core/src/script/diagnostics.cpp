#include "moonlight/script/diagnostics.hpp"

namespace moonlight::script {
namespace {

std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    if (!out.empty()) out += '\n';
    out += d.to_string();
  }
  return out;
}

}  // namespace

std::string_view to_string(DiagnosticKind kind) noexcept {
  switch (kind) {
    case DiagnosticKind::Lexical: return "lexical error";
    case DiagnosticKind::Syntax: return "syntax error";
    case DiagnosticKind::DuplicateName: return "duplicate name";
    case DiagnosticKind::UnknownIdentifier: return "unknown identifier";
    case DiagnosticKind::SpatialWithoutSpace: return "spatial operator without space";
    case DiagnosticKind::CyclicReference: return "cyclic reference";
    case DiagnosticKind::ArityMismatch: return "arity mismatch";
    case DiagnosticKind::InvalidInterval: return "invalid interval";
    case DiagnosticKind::UnknownFormula: return "unknown formula";
    case DiagnosticKind::MissingArgument: return "missing argument";
    case DiagnosticKind::ExtraArgument: return "extra argument";
    case DiagnosticKind::IllTypedArgument: return "ill-typed argument";
  }
  return "error";
}

std::string Diagnostic::to_string() const {
  std::string out = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
                    std::string(script::to_string(kind)) + ": " + message;
  if (!token.empty()) out += " ('" + token + "')";
  return out;
}

ScriptError::ScriptError(std::vector<Diagnostic> diagnostics)
    : Error(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

ScriptError::ScriptError(Diagnostic diagnostic)
    : ScriptError(std::vector<Diagnostic>{std::move(diagnostic)}) {}

}  // namespace moonlight::script
