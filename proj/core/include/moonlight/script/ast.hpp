#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "moonlight/domain.hpp"
#include "moonlight/record.hpp"

namespace moonlight::script {

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

// ---------------------------------------------------------------------------
// Arithmetic expressions inside atomic comparisons.

enum class ExprKind { Number, Variable, Parameter, Negate, Add, Sub, Mul, Div };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::Number;
  double number = 0.0;  ///< Number
  std::string name;     ///< Variable, Parameter
  ExprPtr lhs, rhs;     ///< Negate uses lhs only
  SourcePos pos;
};

/// Structural equality; source positions are ignored.
bool operator==(const Expr& a, const Expr& b);

ExprPtr make_number(double value, SourcePos pos = {});
ExprPtr make_variable(std::string name, SourcePos pos = {});
ExprPtr make_parameter(std::string name, SourcePos pos = {});
ExprPtr make_negate(ExprPtr operand, SourcePos pos = {});
ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, SourcePos pos = {});

// ---------------------------------------------------------------------------
// Interval bounds and distance expressions.

struct Bound {
  enum class Kind { Number, Infinity, Parameter };
  Kind kind = Kind::Number;
  double value = 0.0;
  std::string param;
  SourcePos pos;

  static Bound number(double v, SourcePos pos = {}) { return {Kind::Number, v, {}, pos}; }
  static Bound infinity(SourcePos pos = {}) { return {Kind::Infinity, 0.0, {}, pos}; }
  static Bound parameter(std::string name, SourcePos pos = {}) {
    return {Kind::Parameter, 0.0, std::move(name), pos};
  }
};

bool operator==(const Bound& a, const Bound& b);

struct IntervalSpec {
  Bound lo, hi;
};

bool operator==(const IntervalSpec& a, const IntervalSpec& b);

/// Edge length rule of a spatial operator: a label name or a literal.
/// An absent DistanceSpec means the constant 1.0.
struct DistanceSpec {
  enum class Kind { Label, Literal };
  Kind kind = Kind::Literal;
  std::string label;
  double literal = 1.0;
  SourcePos pos;
};

bool operator==(const DistanceSpec& a, const DistanceSpec& b);

// ---------------------------------------------------------------------------
// Formulas.

enum class Op {
  Atomic,
  Not,
  And,
  Or,
  Implies,
  Until,
  Since,
  Eventually,
  Globally,
  Once,
  Historically,
  Reach,
  Escape,
  Somewhere,
  Everywhere,
  Reference,
};

std::string_view keyword(Op op) noexcept;
bool is_temporal(Op op) noexcept;
bool is_spatial(Op op) noexcept;
bool is_binary(Op op) noexcept;

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  Op op = Op::Atomic;

  CmpOp cmp = CmpOp::Eq;  ///< Atomic
  ExprPtr lhs, rhs;       ///< Atomic

  std::optional<IntervalSpec> interval;  ///< temporal and spatial operators
  std::optional<DistanceSpec> distance;  ///< spatial operators

  std::vector<FormulaPtr> operands;  ///< one for unary, two for binary

  std::string name;         ///< Reference: formula name
  std::vector<Bound> args;  ///< Reference: actual arguments

  SourcePos pos;
};

/// Structural equality; source positions are ignored.
bool operator==(const Formula& a, const Formula& b);

FormulaPtr make_atomic(CmpOp cmp, ExprPtr lhs, ExprPtr rhs, SourcePos pos = {});
FormulaPtr make_not(FormulaPtr operand, SourcePos pos = {});
FormulaPtr make_binary(Op op, FormulaPtr lhs, FormulaPtr rhs, SourcePos pos = {});
FormulaPtr make_temporal(Op op, std::optional<IntervalSpec> interval, FormulaPtr lhs,
                         FormulaPtr rhs = nullptr, SourcePos pos = {});
FormulaPtr make_spatial(Op op, std::optional<DistanceSpec> distance,
                        std::optional<IntervalSpec> interval, FormulaPtr lhs,
                        FormulaPtr rhs = nullptr, SourcePos pos = {});
FormulaPtr make_reference(std::string name, std::vector<Bound> args = {}, SourcePos pos = {});

bool contains_spatial(const Formula& f);
/// Number of operator levels; atoms and references count as 1.
std::size_t depth(const Formula& f);

// ---------------------------------------------------------------------------
// Scripts.

struct FormulaParam {
  std::string name;
  ValueType type = ValueType::Real;
  SourcePos pos;
};

struct FormulaDef {
  std::string name;
  std::vector<FormulaParam> params;
  FormulaPtr body;
  SourcePos pos;
};

struct Script {
  RecordSchema signals;
  std::optional<RecordSchema> edges;  ///< absent for purely temporal scripts
  DomainKind domain = DomainKind::Boolean;
  std::vector<FormulaDef> formulas;

  const FormulaDef* find(std::string_view name) const noexcept;
};

/// Structural equality; source positions are ignored.
bool operator==(const FormulaParam& a, const FormulaParam& b);
bool operator==(const FormulaDef& a, const FormulaDef& b);
bool operator==(const Script& a, const Script& b);

/// Actual parameter values, by name.
using FormulaArgs = std::map<std::string, double, std::less<>>;

}  // namespace moonlight::script
