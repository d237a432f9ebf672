#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "moonlight/script/ast.hpp"

namespace moonlight::script::detail {

enum class TokenKind { Identifier, Keyword, Number, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  double number = 0.0;
  SourcePos pos;

  bool is(TokenKind k, std::string_view t) const noexcept { return kind == k && text == t; }
  bool is_symbol(std::string_view t) const noexcept { return is(TokenKind::Symbol, t); }
  bool is_keyword(std::string_view t) const noexcept { return is(TokenKind::Keyword, t); }
};

bool is_reserved(std::string_view word) noexcept;

/// Splits `text` into tokens; '#' starts a comment running to end of line.
/// The last token is always End. Throws ScriptError (Lexical).
std::vector<Token> tokenize(std::string_view text);

}  // namespace moonlight::script::detail
