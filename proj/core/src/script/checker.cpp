#include "moonlight/script/checker.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "moonlight/script/parser.hpp"
#include "../number_format.hpp"

namespace moonlight::script {
namespace {

class Checker {
 public:
  explicit Checker(const Script& s) : script_(s) {}

  std::vector<Diagnostic> run() {
    for (const auto& def : script_.formulas) {
      current_ = &def;
      formula(*def.body);
    }
    current_ = nullptr;
    cycles();
    return std::move(out_);
  }

 private:
  void report(DiagnosticKind kind, SourcePos pos, std::string token, std::string message) {
    out_.push_back({kind, pos, std::move(token), std::move(message)});
  }

  const FormulaParam* param(std::string_view name) const {
    for (const auto& p : current_->params) {
      if (p.name == name) return &p;
    }
    return nullptr;
  }

  void expr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Number: return;
      case ExprKind::Variable:
        if (!script_.signals.index_of(e.name)) {
          report(DiagnosticKind::UnknownIdentifier, e.pos, e.name,
                 "'" + e.name + "' is not a declared signal variable or parameter");
        }
        return;
      case ExprKind::Parameter:
        if (!param(e.name)) {
          report(DiagnosticKind::UnknownIdentifier, e.pos, e.name,
                 "'" + e.name + "' is not a parameter of " + current_->name);
        }
        return;
      case ExprKind::Negate: expr(*e.lhs); return;
      default:
        expr(*e.lhs);
        expr(*e.rhs);
    }
  }

  void bound(const Bound& b) {
    if (b.kind == Bound::Kind::Parameter && !param(b.param)) {
      report(DiagnosticKind::UnknownIdentifier, b.pos, b.param,
             "'" + b.param + "' is not a parameter of " + current_->name);
    }
  }

  void interval(const IntervalSpec& spec, SourcePos pos) {
    bound(spec.lo);
    bound(spec.hi);
    if (spec.lo.kind == Bound::Kind::Infinity) {
      report(DiagnosticKind::InvalidInterval, spec.lo.pos, "inf",
             "interval lower bound must be finite");
    } else if (spec.lo.kind == Bound::Kind::Number && spec.hi.kind == Bound::Kind::Number &&
               spec.hi.value < spec.lo.value) {
      report(DiagnosticKind::InvalidInterval, pos, "",
             "interval [" + format_number(spec.lo.value) + ", " + format_number(spec.hi.value) +
                 "] is empty");
    }
  }

  void formula(const Formula& f) {
    switch (f.op) {
      case Op::Atomic:
        expr(*f.lhs);
        expr(*f.rhs);
        return;
      case Op::Reference: reference(f); return;
      default: break;
    }
    if (f.interval) interval(*f.interval, f.pos);
    if (is_spatial(f.op)) {
      if (!script_.edges) {
        report(DiagnosticKind::SpatialWithoutSpace, f.pos, std::string(keyword(f.op)),
               "spatial operator used but the script declares no space");
      } else if (f.distance && f.distance->kind == DistanceSpec::Kind::Label &&
                 !script_.edges->index_of(f.distance->label)) {
        report(DiagnosticKind::UnknownIdentifier, f.distance->pos, f.distance->label,
               "'" + f.distance->label + "' is not a declared edge label");
      }
      if (f.distance && f.distance->kind == DistanceSpec::Kind::Literal &&
          !(f.distance->literal >= 0.0)) {
        report(DiagnosticKind::InvalidInterval, f.distance->pos, "",
               "distance literal must be non-negative");
      }
    }
    for (const auto& c : f.operands) formula(*c);
  }

  void reference(const Formula& f) {
    for (const auto& a : f.args) bound(a);
    const FormulaDef* target = script_.find(f.name);
    if (!target) {
      report(DiagnosticKind::UnknownIdentifier, f.pos, f.name,
             "'" + f.name + "' is not a formula");
      return;
    }
    edges_[current_->name].push_back({target->name, f.pos});
    if (target->params.size() != f.args.size()) {
      report(DiagnosticKind::ArityMismatch, f.pos, f.name,
             "'" + f.name + "' takes " + std::to_string(target->params.size()) +
                 " argument(s), got " + std::to_string(f.args.size()));
    }
  }

  void cycles() {
    enum class Mark { None, Active, Done };
    std::map<std::string, Mark, std::less<>> mark;
    std::vector<std::string> stack;
    std::function<void(const std::string&)> visit = [&](const std::string& name) {
      mark[name] = Mark::Active;
      stack.push_back(name);
      for (const auto& [target, pos] : edges_[name]) {
        const Mark m = mark[target];
        if (m == Mark::Active) {
          auto first = std::find(stack.begin(), stack.end(), target);
          std::string path;
          for (auto it = first; it != stack.end(); ++it) path += *it + " -> ";
          path += target;
          report(DiagnosticKind::CyclicReference, pos, target, "formula cycle " + path);
        } else if (m == Mark::None) {
          visit(target);
        }
      }
      stack.pop_back();
      mark[name] = Mark::Done;
    };
    for (const auto& def : script_.formulas) {
      if (mark[def.name] == Mark::None) visit(def.name);
    }
  }

  struct RefEdge {
    std::string target;
    SourcePos pos;
  };

  const Script& script_;
  const FormulaDef* current_ = nullptr;
  std::map<std::string, std::vector<RefEdge>, std::less<>> edges_;
  std::vector<Diagnostic> out_;
};

// Substitutes parameters and inlines references. `env` maps the current
// formula's parameters to values.
class Instantiator {
 public:
  explicit Instantiator(const Script& s) : script_(s) {}

  FormulaPtr call(const FormulaDef& def, const FormulaArgs& args, SourcePos at) {
    for (const auto& p : def.params) {
      auto it = args.find(p.name);
      if (it == args.end()) {
        throw ScriptError(Diagnostic{DiagnosticKind::MissingArgument, at, p.name,
                                     "no value for parameter '" + p.name + "' of " + def.name});
      }
      const double v = it->second;
      if (std::isnan(v) || (p.type == ValueType::Int && std::trunc(v) != v)) {
        throw ScriptError(Diagnostic{DiagnosticKind::IllTypedArgument, at, p.name,
                                     "parameter '" + p.name + "' of " + def.name + " expects " +
                                         std::string(moonlight::to_string(p.type)) +
                                         ", got " + format_number(v)});
      }
    }
    for (const auto& [name, value] : args) {
      if (std::none_of(def.params.begin(), def.params.end(),
                       [&](const FormulaParam& p) { return p.name == name; })) {
        throw ScriptError(Diagnostic{DiagnosticKind::ExtraArgument, at, name,
                                     def.name + " has no parameter '" + name + "'"});
      }
    }
    const FormulaArgs* saved = env_;
    env_ = &args;
    FormulaPtr out = formula(*def.body);
    env_ = saved;
    return out;
  }

 private:
  double lookup(const std::string& name, SourcePos pos) const {
    auto it = env_->find(name);
    if (it == env_->end()) {
      throw ScriptError(Diagnostic{DiagnosticKind::UnknownIdentifier, pos, name,
                                   "unbound parameter '" + name + "'"});
    }
    return it->second;
  }

  Bound bound(const Bound& b) const {
    if (b.kind != Bound::Kind::Parameter) return b;
    const double v = lookup(b.param, b.pos);
    return std::isinf(v) && v > 0 ? Bound::infinity(b.pos) : Bound::number(v, b.pos);
  }

  ExprPtr expr(const ExprPtr& e) const {
    switch (e->kind) {
      case ExprKind::Number:
      case ExprKind::Variable: return e;
      case ExprKind::Parameter: return make_number(lookup(e->name, e->pos), e->pos);
      case ExprKind::Negate: return make_negate(expr(e->lhs), e->pos);
      default: return make_binary(e->kind, expr(e->lhs), expr(e->rhs), e->pos);
    }
  }

  FormulaPtr formula(const Formula& f) {
    if (f.op == Op::Reference) {
      const FormulaDef* target = script_.find(f.name);
      if (!target) {
        throw ScriptError(Diagnostic{DiagnosticKind::UnknownFormula, f.pos, f.name,
                                     "no formula named '" + f.name + "'"});
      }
      FormulaArgs args;
      for (std::size_t i = 0; i < f.args.size() && i < target->params.size(); ++i) {
        const Bound b = bound(f.args[i]);
        args[target->params[i].name] =
            b.kind == Bound::Kind::Infinity ? std::numeric_limits<double>::infinity() : b.value;
      }
      return call(*target, args, f.pos);
    }
    Formula out = f;
    if (f.op == Op::Atomic) {
      out.lhs = expr(f.lhs);
      out.rhs = expr(f.rhs);
      return std::make_shared<const Formula>(std::move(out));
    }
    if (f.interval) {
      out.interval = IntervalSpec{bound(f.interval->lo), bound(f.interval->hi)};
      const Bound& lo = out.interval->lo;
      const Bound& hi = out.interval->hi;
      const double hi_value =
          hi.kind == Bound::Kind::Infinity ? std::numeric_limits<double>::infinity() : hi.value;
      if (lo.kind == Bound::Kind::Infinity || lo.value < 0.0 || hi_value < lo.value) {
        throw ScriptError(Diagnostic{DiagnosticKind::InvalidInterval, f.pos, "",
                                     "interval bounds out of order or negative"});
      }
    }
    for (auto& c : out.operands) c = formula(*c);
    return std::make_shared<const Formula>(std::move(out));
  }

  const Script& script_;
  const FormulaArgs* env_ = nullptr;
};

}  // namespace

std::vector<Diagnostic> type_check(const Script& script) { return Checker(script).run(); }

CheckedScript::CheckedScript(Script script) : script_(std::move(script)) {
  auto diagnostics = type_check(script_);
  if (!diagnostics.empty()) throw ScriptError(std::move(diagnostics));
}

CheckedScript load_script(std::string_view text) { return CheckedScript(parse_script(text)); }

FormulaPtr instantiate_formula(const CheckedScript& script, std::string_view name,
                               const FormulaArgs& args) {
  const FormulaDef* def = script->find(name);
  if (!def) {
    throw ScriptError(Diagnostic{DiagnosticKind::UnknownFormula, {}, std::string(name),
                                 "no formula named '" + std::string(name) + "'"});
  }
  return Instantiator(script.script()).call(*def, args, def->pos);
}

}  // namespace moonlight::script
