#include "moonlight/script/printer.hpp"

#include "../number_format.hpp"

namespace moonlight::script {
namespace {

bool is_leaf(const Expr& e) {
  return e.kind == ExprKind::Number || e.kind == ExprKind::Variable ||
         e.kind == ExprKind::Parameter || e.kind == ExprKind::Negate;
}

std::string nested(const Expr& e) {
  return is_leaf(e) ? to_string(e) : "(" + to_string(e) + ")";
}

std::string to_string(const Bound& b) {
  switch (b.kind) {
    case Bound::Kind::Number: return format_number(b.value);
    case Bound::Kind::Infinity: return "inf";
    case Bound::Kind::Parameter: return b.param;
  }
  return "?";
}

std::string to_string(const std::optional<IntervalSpec>& i) {
  if (!i) return "";
  return " [" + to_string(i->lo) + ", " + to_string(i->hi) + "]";
}

std::string to_string(const std::optional<DistanceSpec>& d) {
  if (!d) return "";
  if (d->kind == DistanceSpec::Kind::Label) return "(" + d->label + ")";
  return "(" + format_number(d->literal) + ")";
}

// Binary formulas are braced when they appear as operands so the canonical
// text never depends on precedence.
std::string operand(const Formula& f) {
  return is_binary(f.op) ? "{" + to_string(f) + "}" : to_string(f);
}

std::string fields(const RecordSchema& schema) {
  std::string out = "{";
  for (const auto& f : schema.fields()) {
    out += " " + std::string(moonlight::to_string(f.type)) + " " + f.name + ";";
  }
  return out + " }";
}

}  // namespace

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number: return format_number(e.number);
    case ExprKind::Variable:
    case ExprKind::Parameter: return e.name;
    case ExprKind::Negate:
      // "-2" reads back as a negative literal, so a negated literal keeps its parentheses.
      return e.lhs->kind == ExprKind::Number ? "-(" + to_string(*e.lhs) + ")" : "-" + nested(*e.lhs);
    case ExprKind::Add: return nested(*e.lhs) + " + " + nested(*e.rhs);
    case ExprKind::Sub: return nested(*e.lhs) + " - " + nested(*e.rhs);
    case ExprKind::Mul: return nested(*e.lhs) + " * " + nested(*e.rhs);
    case ExprKind::Div: return nested(*e.lhs) + " / " + nested(*e.rhs);
  }
  return "?";
}

std::string to_string(const Formula& f) {
  switch (f.op) {
    case Op::Atomic:
      return "(" + to_string(*f.lhs) + " " + std::string(moonlight::to_string(f.cmp)) + " " +
             to_string(*f.rhs) + ")";
    case Op::Reference: {
      std::string out = f.name;
      if (!f.args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          if (i) out += ", ";
          out += to_string(f.args[i]);
        }
        out += ")";
      }
      return out;
    }
    case Op::Not: return "!" + operand(*f.operands[0]);
    case Op::And:
    case Op::Or:
    case Op::Implies:
      return operand(*f.operands[0]) + " " + std::string(keyword(f.op)) + " " +
             operand(*f.operands[1]);
    case Op::Until:
    case Op::Since:
      return operand(*f.operands[0]) + " " + std::string(keyword(f.op)) +
             to_string(f.interval) + " " + operand(*f.operands[1]);
    case Op::Reach:
      return operand(*f.operands[0]) + " reach" + to_string(f.distance) +
             to_string(f.interval) + " " + operand(*f.operands[1]);
    case Op::Eventually:
    case Op::Globally:
    case Op::Once:
    case Op::Historically:
      return std::string(keyword(f.op)) + to_string(f.interval) + " " + operand(*f.operands[0]);
    case Op::Escape:
    case Op::Somewhere:
    case Op::Everywhere:
      return std::string(keyword(f.op)) + to_string(f.distance) + to_string(f.interval) + " " +
             operand(*f.operands[0]);
  }
  return "?";
}

std::string to_string(const Script& s) {
  std::string out = "signal " + fields(s.signals) + "\n";
  if (s.edges) out += "space { edges " + fields(*s.edges) + " }\n";
  out += "domain " + std::string(moonlight::to_string(s.domain)) + ";\n";
  for (const auto& def : s.formulas) {
    out += "formula " + def.name;
    if (!def.params.empty()) {
      out += "(";
      for (std::size_t i = 0; i < def.params.size(); ++i) {
        if (i) out += ", ";
        out += std::string(moonlight::to_string(def.params[i].type)) + " " + def.params[i].name;
      }
      out += ")";
    }
    out += " = " + to_string(*def.body) + ";\n";
  }
  return out;
}

}  // namespace moonlight::script
