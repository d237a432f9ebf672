#pragma once

// Script snippets shared by the parser unit tests and the acceptance run.

#include <string_view>

#include "moonlight/script/ast.hpp"

namespace moonlight::testkit {

/// Declarations every grammar sentence and malformed body is parsed against.
inline constexpr std::string_view kScriptHeader =
    "signal { real x; int y; }\n"
    "space { edges { int hop; real w; } }\n"
    "domain minmax;\n"
    "formula a = (x > 0);\n"
    "formula b = (y == 1);\n";

struct GrammarSentence {
  script::Op op;  ///< root operator of the parsed sentence
  std::string_view text;
};

/// One sentence per formula production, interval syntax in both spellings.
inline constexpr GrammarSentence kGrammarSentences[] = {
    {script::Op::Atomic, "(x + 2 * y <= -(1.5 - x) / 4)"},
    {script::Op::Not, "! a"},
    {script::Op::And, "a & b"},
    {script::Op::Or, "a | b"},
    {script::Op::Implies, "a => b"},
    {script::Op::Until, "a until [0 5] b"},
    {script::Op::Since, "a since [1, 2.5] b"},
    {script::Op::Eventually, "eventually [0 5] a"},
    {script::Op::Globally, "globally [0, inf] a"},
    {script::Op::Once, "once [2 3] a"},
    {script::Op::Historically, "historically a"},
    {script::Op::Escape, "escape(hop)[5 inf] a"},
    {script::Op::Reach, "a reach (w)[0, 2.5] b"},
    {script::Op::Somewhere, "somewhere(w) [0 250] a"},
    {script::Op::Everywhere, "everywhere (hop) [0 3] a"},
    {script::Op::Or, "{a | b}"},
};

/// Each body is appended to kScriptHeader and must fail with a diagnostic
/// that carries a line and column.
inline constexpr std::string_view kMalformedBodies[] = {
    "formula f = (x > );",
    "formula f = (x $ 1);",
    "formula f = a &;",
    "formula f = eventually [0 5 a;",
    "formula f = a until [0, 5 b;",
    "formula f = {a | b;",
    "formula f = (x > 1",
    "formula f = a reach (hop) [0 1];",
    "formula = a;",
    "formula f a;",
    "formula f = a",
    "formula f = escape(hop)[inf 2] a;",
    "formula f = (pressure > 2);",
    "formula f = c;",
    "formula a = (x < 1);",
    "formula f = g; formula g = f;",
    "formula f(int k) = eventually [0 k] k;",
    "formula f = a(1);",
    "formula f = eventually [3 1] a;",
    "formula f = (x > 1) @ b;",
};

}  // namespace moonlight::testkit
