#include "lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "moonlight/script/diagnostics.hpp"

namespace moonlight::script::detail {
namespace {

constexpr std::array<std::string_view, 20> kReserved = {
    "signal", "space",     "edges",      "domain",   "boolean",      "minmax", "formula",
    "int",    "real",      "until",      "since",    "eventually",   "globally", "once",
    "historically", "reach", "escape",   "somewhere", "everywhere",  "inf"};

// Two-character symbols must be tried before their one-character prefixes.
constexpr std::array<std::string_view, 5> kLongSymbols = {"==", "!=", "<=", ">=", "=>"};
constexpr std::string_view kShortSymbols = "{}()[];,=<>!&|+-*/";

}  // namespace

bool is_reserved(std::string_view word) noexcept {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0, line = 1, col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const SourcePos pos{line, col};

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      const auto kind = is_reserved(word) ? TokenKind::Keyword : TokenKind::Identifier;
      tokens.push_back({kind, std::move(word), 0.0, pos});
      advance(j - i);
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && text[j] == '.') {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
          while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
          j = k;
        }
      }
      const std::string_view lexeme = text.substr(i, j - i);
      double value = 0.0;
      auto [end, ec] = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), value);
      if (ec != std::errc{} || end != lexeme.data() + lexeme.size()) {
        throw ScriptError(Diagnostic{DiagnosticKind::Lexical, pos, std::string(lexeme),
                                     "malformed number"});
      }
      if (j < text.size() &&
          (std::isalpha(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        throw ScriptError(Diagnostic{DiagnosticKind::Lexical, pos,
                                     std::string(text.substr(i, j - i + 1)),
                                     "identifier cannot start with a digit"});
      }
      tokens.push_back({TokenKind::Number, std::string(lexeme), value, pos});
      advance(j - i);
      continue;
    }

    bool matched = false;
    for (std::string_view sym : kLongSymbols) {
      if (text.substr(i, 2) == sym) {
        tokens.push_back({TokenKind::Symbol, std::string(sym), 0.0, pos});
        advance(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (kShortSymbols.find(c) != std::string_view::npos) {
      tokens.push_back({TokenKind::Symbol, std::string(1, c), 0.0, pos});
      advance(1);
      continue;
    }
    throw ScriptError(
        Diagnostic{DiagnosticKind::Lexical, pos, std::string(1, c), "unexpected character"});
  }
  tokens.push_back({TokenKind::End, "<end of input>", 0.0, SourcePos{line, col}});
  return tokens;
}

}  // namespace moonlight::script::detail
