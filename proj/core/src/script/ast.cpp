#include "moonlight/script/ast.hpp"

#include <algorithm>

namespace moonlight::script {
namespace {

bool same_ptr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

bool same_ptr(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Number: return a.number == b.number;
    case ExprKind::Variable:
    case ExprKind::Parameter: return a.name == b.name;
    case ExprKind::Negate: return same_ptr(a.lhs, b.lhs);
    default: return same_ptr(a.lhs, b.lhs) && same_ptr(a.rhs, b.rhs);
  }
}

ExprPtr make_number(double value, SourcePos pos) {
  return std::make_shared<const Expr>(Expr{ExprKind::Number, value, {}, nullptr, nullptr, pos});
}

ExprPtr make_variable(std::string name, SourcePos pos) {
  return std::make_shared<const Expr>(
      Expr{ExprKind::Variable, 0.0, std::move(name), nullptr, nullptr, pos});
}

ExprPtr make_parameter(std::string name, SourcePos pos) {
  return std::make_shared<const Expr>(
      Expr{ExprKind::Parameter, 0.0, std::move(name), nullptr, nullptr, pos});
}

ExprPtr make_negate(ExprPtr operand, SourcePos pos) {
  return std::make_shared<const Expr>(
      Expr{ExprKind::Negate, 0.0, {}, std::move(operand), nullptr, pos});
}

ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
  return std::make_shared<const Expr>(Expr{kind, 0.0, {}, std::move(lhs), std::move(rhs), pos});
}

bool operator==(const Bound& a, const Bound& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Bound::Kind::Number: return a.value == b.value;
    case Bound::Kind::Infinity: return true;
    case Bound::Kind::Parameter: return a.param == b.param;
  }
  return false;
}

bool operator==(const IntervalSpec& a, const IntervalSpec& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

bool operator==(const DistanceSpec& a, const DistanceSpec& b) {
  if (a.kind != b.kind) return false;
  return a.kind == DistanceSpec::Kind::Label ? a.label == b.label : a.literal == b.literal;
}

std::string_view keyword(Op op) noexcept {
  switch (op) {
    case Op::Atomic: return "atomic";
    case Op::Not: return "!";
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::Implies: return "=>";
    case Op::Until: return "until";
    case Op::Since: return "since";
    case Op::Eventually: return "eventually";
    case Op::Globally: return "globally";
    case Op::Once: return "once";
    case Op::Historically: return "historically";
    case Op::Reach: return "reach";
    case Op::Escape: return "escape";
    case Op::Somewhere: return "somewhere";
    case Op::Everywhere: return "everywhere";
    case Op::Reference: return "reference";
  }
  return "?";
}

bool is_temporal(Op op) noexcept {
  switch (op) {
    case Op::Until:
    case Op::Since:
    case Op::Eventually:
    case Op::Globally:
    case Op::Once:
    case Op::Historically: return true;
    default: return false;
  }
}

bool is_spatial(Op op) noexcept {
  return op == Op::Reach || op == Op::Escape || op == Op::Somewhere || op == Op::Everywhere;
}

bool is_binary(Op op) noexcept {
  return op == Op::And || op == Op::Or || op == Op::Implies || op == Op::Until ||
         op == Op::Since || op == Op::Reach;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case Op::Atomic:
      return a.cmp == b.cmp && same_ptr(a.lhs, b.lhs) && same_ptr(a.rhs, b.rhs);
    case Op::Reference:
      return a.name == b.name && a.args == b.args;
    default:
      break;
  }
  if (a.interval != b.interval || a.distance != b.distance) return false;
  return std::equal(a.operands.begin(), a.operands.end(), b.operands.begin(), b.operands.end(),
                    [](const FormulaPtr& x, const FormulaPtr& y) { return same_ptr(x, y); });
}

FormulaPtr make_atomic(CmpOp cmp, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
  Formula f;
  f.op = Op::Atomic;
  f.cmp = cmp;
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  f.pos = pos;
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr make_not(FormulaPtr operand, SourcePos pos) {
  Formula f;
  f.op = Op::Not;
  f.operands = {std::move(operand)};
  f.pos = pos;
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr make_binary(Op op, FormulaPtr lhs, FormulaPtr rhs, SourcePos pos) {
  Formula f;
  f.op = op;
  f.operands = {std::move(lhs), std::move(rhs)};
  f.pos = pos;
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr make_temporal(Op op, std::optional<IntervalSpec> interval, FormulaPtr lhs,
                         FormulaPtr rhs, SourcePos pos) {
  Formula f;
  f.op = op;
  f.interval = std::move(interval);
  f.operands.push_back(std::move(lhs));
  if (rhs) f.operands.push_back(std::move(rhs));
  f.pos = pos;
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr make_spatial(Op op, std::optional<DistanceSpec> distance,
                        std::optional<IntervalSpec> interval, FormulaPtr lhs, FormulaPtr rhs,
                        SourcePos pos) {
  Formula f;
  f.op = op;
  f.distance = std::move(distance);
  f.interval = std::move(interval);
  f.operands.push_back(std::move(lhs));
  if (rhs) f.operands.push_back(std::move(rhs));
  f.pos = pos;
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr make_reference(std::string name, std::vector<Bound> args, SourcePos pos) {
  Formula f;
  f.op = Op::Reference;
  f.name = std::move(name);
  f.args = std::move(args);
  f.pos = pos;
  return std::make_shared<const Formula>(std::move(f));
}

bool contains_spatial(const Formula& f) {
  if (is_spatial(f.op)) return true;
  return std::any_of(f.operands.begin(), f.operands.end(),
                     [](const FormulaPtr& c) { return contains_spatial(*c); });
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  for (const auto& c : f.operands) d = std::max(d, depth(*c));
  return d + 1;
}

const FormulaDef* Script::find(std::string_view name) const noexcept {
  for (const auto& def : formulas) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

bool operator==(const FormulaParam& a, const FormulaParam& b) {
  return a.name == b.name && a.type == b.type;
}

bool operator==(const FormulaDef& a, const FormulaDef& b) {
  return a.name == b.name && a.params == b.params && same_ptr(a.body, b.body);
}

bool operator==(const Script& a, const Script& b) {
  return a.signals == b.signals && a.edges == b.edges && a.domain == b.domain &&
         a.formulas == b.formulas;
}

}  // namespace moonlight::script
