#pragma once

#include <concepts>
#include <limits>
#include <string_view>
#include <vector>

namespace moonlight {

enum class DomainKind { Boolean, MinMax };

std::string_view to_string(DomainKind kind) noexcept;
/// Parses "boolean" or "minmax"; returns false on anything else.
bool parse_domain(std::string_view text, DomainKind& out) noexcept;

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view to_string(CmpOp op) noexcept;

/// Qualitative semantics: verdicts are truth values.
struct BooleanDomain {
  using value_type = bool;
  static constexpr DomainKind kind = DomainKind::Boolean;

  static constexpr bool top() noexcept { return true; }
  static constexpr bool bottom() noexcept { return false; }
  static constexpr bool join(bool a, bool b) noexcept { return a || b; }
  static constexpr bool meet(bool a, bool b) noexcept { return a && b; }
  static constexpr bool negation(bool a) noexcept { return !a; }
  static constexpr bool less(bool a, bool b) noexcept { return !a && b; }

  static constexpr bool compare(CmpOp op, double lhs, double rhs) noexcept {
    switch (op) {
      case CmpOp::Eq: return lhs == rhs;
      case CmpOp::Ne: return lhs != rhs;
      case CmpOp::Lt: return lhs < rhs;
      case CmpOp::Le: return lhs <= rhs;
      case CmpOp::Gt: return lhs > rhs;
      case CmpOp::Ge: return lhs >= rhs;
    }
    return false;
  }
};

/// Quantitative (robustness) semantics over the extended reals.
///
/// Order comparisons yield the signed margin; equality tests are crisp and
/// map to top/bottom since a distance-based margin on integer-coded
/// categories carries no meaning.
struct MinMaxDomain {
  using value_type = double;
  static constexpr DomainKind kind = DomainKind::MinMax;

  static constexpr double top() noexcept { return std::numeric_limits<double>::infinity(); }
  static constexpr double bottom() noexcept { return -std::numeric_limits<double>::infinity(); }
  static constexpr double join(double a, double b) noexcept { return a < b ? b : a; }
  static constexpr double meet(double a, double b) noexcept { return b < a ? b : a; }
  static constexpr double negation(double a) noexcept { return -a; }
  static constexpr bool less(double a, double b) noexcept { return a < b; }

  static constexpr double compare(CmpOp op, double lhs, double rhs) noexcept {
    switch (op) {
      case CmpOp::Eq: return lhs == rhs ? top() : bottom();
      case CmpOp::Ne: return lhs != rhs ? top() : bottom();
      case CmpOp::Lt:
      case CmpOp::Le: return rhs - lhs;
      case CmpOp::Gt:
      case CmpOp::Ge: return lhs - rhs;
    }
    return bottom();
  }
};

template <class D>
concept SignalDomain = requires(typename D::value_type a, typename D::value_type b, CmpOp op,
                                double x) {
  { D::kind } -> std::convertible_to<DomainKind>;
  { D::top() } -> std::same_as<typename D::value_type>;
  { D::bottom() } -> std::same_as<typename D::value_type>;
  { D::join(a, b) } -> std::same_as<typename D::value_type>;
  { D::meet(a, b) } -> std::same_as<typename D::value_type>;
  { D::negation(a) } -> std::same_as<typename D::value_type>;
  { D::less(a, b) } -> std::same_as<bool>;
  { D::compare(op, x, x) } -> std::same_as<typename D::value_type>;
};

static_assert(SignalDomain<BooleanDomain>);
static_assert(SignalDomain<MinMaxDomain>);

/// One domain value per time point (temporal) or per location (spatial).
template <SignalDomain D>
using Values = std::vector<typename D::value_type>;

/// Calls `fn.template operator()<D>()` with the domain type matching `kind`.
template <class Fn>
decltype(auto) visit_domain(DomainKind kind, Fn&& fn) {
  if (kind == DomainKind::Boolean) return fn.template operator()<BooleanDomain>();
  return fn.template operator()<MinMaxDomain>();
}

}  // namespace moonlight
