#include "moonlight/script/parser.hpp"

#include <algorithm>
#include <set>

#include "lexer.hpp"

namespace moonlight::script {
namespace {

using detail::Token;
using detail::TokenKind;

bool before(const SourcePos& a, const SourcePos& b) {
  return a.line < b.line || (a.line == b.line && a.column < b.column);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(detail::tokenize(text)) {}

  Script script() {
    Script s;
    s.signals = record_section("signal");
    if (peek().is_keyword("space")) {
      next();
      expect_symbol("{");
      s.edges = record_section("edges");
      expect_symbol("}");
    }
    edges_ = s.edges ? &*s.edges : nullptr;
    if (peek().is_keyword("domain")) {
      next();
      const Token& t = next();
      if (t.is_keyword("boolean")) {
        s.domain = DomainKind::Boolean;
      } else if (t.is_keyword("minmax")) {
        s.domain = DomainKind::MinMax;
      } else {
        fail(t, "expected 'boolean' or 'minmax'");
      }
      expect_symbol(";");
    }
    while (peek().is_keyword("formula")) {
      FormulaDef def = formula_def();
      if (s.find(def.name)) {
        throw ScriptError(Diagnostic{DiagnosticKind::DuplicateName, def.pos, def.name,
                                     "formula already defined"});
      }
      s.formulas.push_back(std::move(def));
    }
    if (peek().kind != TokenKind::End) fail(peek(), "expected 'formula' or end of input");
    return s;
  }

  FormulaPtr standalone(const Script& context, const std::vector<FormulaParam>& params) {
    edges_ = context.edges ? &*context.edges : nullptr;
    params_ = &params;
    FormulaPtr f = formula();
    if (peek().kind != TokenKind::End) fail(peek(), "unexpected trailing input");
    return f;
  }

 private:
  // -- token helpers -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool accept_symbol(std::string_view s) {
    if (!peek().is_symbol(s)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const Token& t, std::string message) const {
    throw ScriptError(Diagnostic{DiagnosticKind::Syntax, t.pos, t.text, std::move(message)});
  }
  const Token& expect_symbol(std::string_view s) {
    if (!peek().is_symbol(s)) fail(peek(), "expected '" + std::string(s) + "'");
    return next();
  }
  const Token& expect_keyword(std::string_view s) {
    if (!peek().is_keyword(s)) fail(peek(), "expected '" + std::string(s) + "'");
    return next();
  }
  const Token& expect_identifier(std::string_view what) {
    if (peek().kind != TokenKind::Identifier) fail(peek(), "expected " + std::string(what));
    return next();
  }

  // -- declarations --------------------------------------------------------

  ValueType value_type() {
    const Token& t = next();
    if (t.is_keyword("int")) return ValueType::Int;
    if (t.is_keyword("real")) return ValueType::Real;
    fail(t, "expected 'int' or 'real'");
  }

  RecordSchema record_section(std::string_view keyword) {
    expect_keyword(keyword);
    expect_symbol("{");
    std::vector<FieldDecl> fields;
    while (!peek().is_symbol("}")) {
      const ValueType type = value_type();
      const Token& name = expect_identifier("a declaration name");
      if (std::any_of(fields.begin(), fields.end(),
                      [&](const FieldDecl& f) { return f.name == name.text; })) {
        throw ScriptError(Diagnostic{DiagnosticKind::DuplicateName, name.pos, name.text,
                                     "name already declared in this section"});
      }
      fields.push_back({name.text, type});
      expect_symbol(";");
    }
    expect_symbol("}");
    return RecordSchema(std::move(fields));
  }

  FormulaDef formula_def() {
    expect_keyword("formula");
    const Token& name = expect_identifier("a formula name");
    FormulaDef def;
    def.name = name.text;
    def.pos = name.pos;
    if (accept_symbol("(")) {
      do {
        const ValueType type = value_type();
        const Token& p = expect_identifier("a parameter name");
        if (std::any_of(def.params.begin(), def.params.end(),
                        [&](const FormulaParam& q) { return q.name == p.text; })) {
          throw ScriptError(Diagnostic{DiagnosticKind::DuplicateName, p.pos, p.text,
                                       "parameter already declared"});
        }
        def.params.push_back({p.text, type, p.pos});
      } while (accept_symbol(","));
      expect_symbol(")");
    }
    expect_symbol("=");
    params_ = &def.params;
    def.body = formula();
    params_ = nullptr;
    expect_symbol(";");
    return def;
  }

  bool is_param(std::string_view name) const {
    return params_ && std::any_of(params_->begin(), params_->end(),
                                  [&](const FormulaParam& p) { return p.name == name; });
  }

  // -- formulas ------------------------------------------------------------

  FormulaPtr formula() {
    FormulaPtr lhs = disjunction();
    if (peek().is_symbol("=>")) {
      const SourcePos pos = next().pos;
      return make_binary(Op::Implies, lhs, formula(), pos);
    }
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    while (peek().is_symbol("|")) {
      const SourcePos pos = next().pos;
      lhs = make_binary(Op::Or, lhs, conjunction(), pos);
    }
    return lhs;
  }

  FormulaPtr conjunction() {
    FormulaPtr lhs = binary_modal();
    while (peek().is_symbol("&")) {
      const SourcePos pos = next().pos;
      lhs = make_binary(Op::And, lhs, binary_modal(), pos);
    }
    return lhs;
  }

  FormulaPtr binary_modal() {
    FormulaPtr lhs = unary();
    for (;;) {
      const Token& t = peek();
      if (t.is_keyword("until") || t.is_keyword("since")) {
        const Op op = t.text == "until" ? Op::Until : Op::Since;
        const SourcePos pos = next().pos;
        auto interval = optional_interval();
        lhs = make_temporal(op, interval, lhs, unary(), pos);
      } else if (t.is_keyword("reach")) {
        const SourcePos pos = next().pos;
        auto distance = optional_distance();
        auto interval = optional_interval();
        lhs = make_spatial(Op::Reach, distance, interval, lhs, unary(), pos);
      } else {
        return lhs;
      }
    }
  }

  FormulaPtr unary() {
    const Token& t = peek();
    if (t.is_symbol("!")) {
      const SourcePos pos = next().pos;
      return make_not(unary(), pos);
    }
    if (t.kind == TokenKind::Keyword) {
      static const std::pair<std::string_view, Op> temporal[] = {
          {"eventually", Op::Eventually},
          {"globally", Op::Globally},
          {"once", Op::Once},
          {"historically", Op::Historically}};
      static const std::pair<std::string_view, Op> spatial[] = {
          {"escape", Op::Escape}, {"somewhere", Op::Somewhere}, {"everywhere", Op::Everywhere}};
      for (const auto& [word, op] : temporal) {
        if (t.text == word) {
          const SourcePos pos = next().pos;
          auto interval = optional_interval();
          return make_temporal(op, interval, unary(), nullptr, pos);
        }
      }
      for (const auto& [word, op] : spatial) {
        if (t.text == word) {
          const SourcePos pos = next().pos;
          auto distance = optional_distance();
          auto interval = optional_interval();
          return make_spatial(op, distance, interval, unary(), nullptr, pos);
        }
      }
    }
    return primary();
  }

  FormulaPtr primary() {
    const Token& t = peek();
    if (t.is_symbol("{")) {
      next();
      FormulaPtr f = formula();
      expect_symbol("}");
      return f;
    }
    if (t.is_symbol("(")) return parenthesized();
    if (t.kind == TokenKind::Identifier) {
      next();
      if (is_param(t.text)) {
        fail(t, "numeric parameter used where a formula is expected");
      }
      std::vector<Bound> args;
      if (accept_symbol("(")) {
        do {
          args.push_back(bound());
        } while (accept_symbol(","));
        expect_symbol(")");
      }
      return make_reference(t.text, std::move(args), t.pos);
    }
    fail(t, "expected a formula");
  }

  // '(' opens either an atomic comparison or a grouped formula. The atomic
  // reading is tried first; on failure the parser rewinds and tries the
  // grouped one, reporting whichever attempt got further.
  FormulaPtr parenthesized() {
    const std::size_t start = pos_;
    std::optional<ScriptError> atomic_error;
    try {
      const SourcePos pos = expect_symbol("(").pos;
      ExprPtr lhs = arith();
      const Token& op = next();
      CmpOp cmp;
      if (op.is_symbol("==")) cmp = CmpOp::Eq;
      else if (op.is_symbol("!=")) cmp = CmpOp::Ne;
      else if (op.is_symbol("<")) cmp = CmpOp::Lt;
      else if (op.is_symbol("<=")) cmp = CmpOp::Le;
      else if (op.is_symbol(">")) cmp = CmpOp::Gt;
      else if (op.is_symbol(">=")) cmp = CmpOp::Ge;
      else fail(op, "expected a comparison operator");
      ExprPtr rhs = arith();
      expect_symbol(")");
      return make_atomic(cmp, std::move(lhs), std::move(rhs), pos);
    } catch (const ScriptError& e) {
      if (e.diagnostics().front().kind != DiagnosticKind::Syntax) throw;
      atomic_error = e;
    }
    pos_ = start;
    try {
      expect_symbol("(");
      FormulaPtr f = formula();
      expect_symbol(")");
      return f;
    } catch (const ScriptError& e) {
      if (e.diagnostics().front().kind != DiagnosticKind::Syntax) throw;
      const auto& a = atomic_error->diagnostics().front().pos;
      const auto& b = e.diagnostics().front().pos;
      if (before(b, a)) throw *atomic_error;
      throw;
    }
  }

  // -- intervals and distances --------------------------------------------

  Bound bound() {
    const Token& t = next();
    if (t.kind == TokenKind::Number) return Bound::number(t.number, t.pos);
    if (t.is_keyword("inf")) return Bound::infinity(t.pos);
    if (t.kind == TokenKind::Identifier) return Bound::parameter(t.text, t.pos);
    fail(t, "expected a number, 'inf' or a parameter name");
  }

  std::optional<IntervalSpec> optional_interval() {
    if (!accept_symbol("[")) return std::nullopt;
    IntervalSpec spec;
    spec.lo = bound();
    accept_symbol(",");
    spec.hi = bound();
    expect_symbol("]");
    return spec;
  }

  // "(label)" or "(number)" right after a spatial keyword is a distance
  // expression. "(name)" counts as one when name is a declared edge label or
  // an operand follows; otherwise it is a parenthesized formula reference.
  std::optional<DistanceSpec> optional_distance() {
    if (!peek().is_symbol("(") || !peek(2).is_symbol(")")) return std::nullopt;
    const Token& inner = peek(1);
    if (inner.kind == TokenKind::Number) {
      next();
      next();
      next();
      return DistanceSpec{DistanceSpec::Kind::Literal, {}, inner.number, inner.pos};
    }
    if (inner.kind == TokenKind::Identifier &&
        ((edges_ && edges_->index_of(inner.text)) || starts_operand(peek(3)))) {
      next();
      next();
      next();
      return DistanceSpec{DistanceSpec::Kind::Label, inner.text, 1.0, inner.pos};
    }
    return std::nullopt;
  }

  // True when `t` can only continue a spatial prefix after its distance
  // expression, i.e. "(name)" cannot have been the operand itself.
  static bool starts_operand(const Token& t) {
    if (t.is_symbol("[") || t.is_symbol("(") || t.is_symbol("{") || t.is_symbol("!")) return true;
    if (t.kind == TokenKind::Identifier) return true;
    for (std::string_view word : {"eventually", "globally", "once", "historically", "escape",
                                  "somewhere", "everywhere"}) {
      if (t.is_keyword(word)) return true;
    }
    return false;
  }

  // -- arithmetic ----------------------------------------------------------

  ExprPtr arith() {
    ExprPtr lhs = term();
    for (;;) {
      if (peek().is_symbol("+")) {
        const SourcePos pos = next().pos;
        lhs = make_binary(ExprKind::Add, lhs, term(), pos);
      } else if (peek().is_symbol("-")) {
        const SourcePos pos = next().pos;
        lhs = make_binary(ExprKind::Sub, lhs, term(), pos);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      if (peek().is_symbol("*")) {
        const SourcePos pos = next().pos;
        lhs = make_binary(ExprKind::Mul, lhs, factor(), pos);
      } else if (peek().is_symbol("/")) {
        const SourcePos pos = next().pos;
        lhs = make_binary(ExprKind::Div, lhs, factor(), pos);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    const Token& t = next();
    if (t.is_symbol("-")) {
      // A minus sign directly before a literal is part of the literal.
      if (peek().kind == TokenKind::Number) return make_number(-next().number, t.pos);
      return make_negate(factor(), t.pos);
    }
    if (t.kind == TokenKind::Number) return make_number(t.number, t.pos);
    if (t.kind == TokenKind::Identifier) {
      return is_param(t.text) ? make_parameter(t.text, t.pos) : make_variable(t.text, t.pos);
    }
    if (t.is_symbol("(")) {
      ExprPtr e = arith();
      expect_symbol(")");
      return e;
    }
    fail(t, "expected a number, a variable or '('");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const RecordSchema* edges_ = nullptr;
  const std::vector<FormulaParam>* params_ = nullptr;
};

}  // namespace

Script parse_script(std::string_view text) { return Parser(text).script(); }

FormulaPtr parse_formula(std::string_view text, const Script& context,
                         const std::vector<FormulaParam>& params) {
  return Parser(text).standalone(context, params);
}

}  // namespace moonlight::script
