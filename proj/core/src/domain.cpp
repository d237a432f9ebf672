#include "moonlight/domain.hpp"

namespace moonlight {

std::string_view to_string(DomainKind kind) noexcept {
  return kind == DomainKind::Boolean ? "boolean" : "minmax";
}

bool parse_domain(std::string_view text, DomainKind& out) noexcept {
  if (text == "boolean") {
    out = DomainKind::Boolean;
    return true;
  }
  if (text == "minmax") {
    out = DomainKind::MinMax;
    return true;
  }
  return false;
}

std::string_view to_string(CmpOp op) noexcept {
  switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

}  // namespace moonlight
