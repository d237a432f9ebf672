#include <gtest/gtest.h>

#include <limits>
#include <vector>

#include "moonlight/error.hpp"
#include "moonlight/temporal.hpp"
#include "oracle.hpp"
#include "random_instances.hpp"

namespace moonlight::temporal {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const TimeGrid kUnit({0, 1, 2});

TEST(Temporal, GloballyWindowMinimum) {
  const auto out = globally<MinMaxDomain>(kUnit, {5, 3, 4}, Interval(0, 2));
  EXPECT_EQ(out[0], 3);
  EXPECT_EQ(out[1], 3);
  EXPECT_EQ(out[2], 4);
}

TEST(Temporal, EventuallyWindowJoin) {
  const auto out = eventually<BooleanDomain>(kUnit, {false, false, true}, Interval(0, 2));
  EXPECT_EQ(out, (Values<BooleanDomain>{true, true, true}));
  const auto shorter = eventually<BooleanDomain>(kUnit, {false, false, true}, Interval(0, 1));
  EXPECT_EQ(shorter, (Values<BooleanDomain>{false, true, true}));
}

TEST(Temporal, EmptyWindowsGiveNeutralElements) {
  const Values<MinMaxDomain> s = {1, 2, 3};
  const Interval far(10, 20);
  EXPECT_EQ(globally<MinMaxDomain>(kUnit, s, far), Values<MinMaxDomain>(3, kInf));
  EXPECT_EQ(eventually<MinMaxDomain>(kUnit, s, far), Values<MinMaxDomain>(3, -kInf));
  EXPECT_EQ(historically<MinMaxDomain>(kUnit, s, far), Values<MinMaxDomain>(3, kInf));
  EXPECT_EQ(monitor_until<MinMaxDomain>(kUnit, s, s, far), Values<MinMaxDomain>(3, -kInf));
}

TEST(Temporal, UntilPrefixIsStrict) {
  // lhs fails exactly at the witness: until still holds at 0.
  const auto out = monitor_until<BooleanDomain>(kUnit, {true, false, false}, {false, true, false},
                                                Interval(0, 2));
  EXPECT_TRUE(out[0]);
  EXPECT_TRUE(out[1]);
  EXPECT_FALSE(out[2]);
}

TEST(Temporal, SinceMirrorsUntil) {
  const auto out = monitor_since<BooleanDomain>(kUnit, {false, false, true}, {false, true, false},
                                                Interval(0, 2));
  EXPECT_EQ(out, (Values<BooleanDomain>{false, true, true}));
}

TEST(Temporal, NonUniformGrid) {
  const TimeGrid g({0, 0.5, 3, 3.25});
  const auto out = eventually<MinMaxDomain>(g, {1, 4, 2, 7}, Interval(0.5, 3));
  EXPECT_EQ(out, (Values<MinMaxDomain>{4, 7, -kInf, -kInf}));
}

TEST(AtomicEvaluator, ArithmeticAndErrors) {
  using namespace script;
  const RecordSchema schema({{"x", ValueType::Real}, {"y", ValueType::Int}});
  const std::vector<double> row = {1.5, 2};
  const auto atom = make_atomic(
      CmpOp::Lt, make_binary(ExprKind::Add, make_variable("x"), make_negate(make_variable("y"))),
      make_binary(ExprKind::Div, make_number(1), make_number(4)));
  EXPECT_EQ(eval_atomic<MinMaxDomain>(*atom, row, schema), 0.25 - (1.5 - 2));
  EXPECT_TRUE(eval_atomic<BooleanDomain>(*atom, row, schema));

  const auto div0 = make_atomic(CmpOp::Lt, make_variable("x"),
                                make_binary(ExprKind::Div, make_number(1),
                                            make_binary(ExprKind::Sub, make_variable("y"),
                                                        make_number(2))));
  try {
    eval_atomic<MinMaxDomain>(*div0, row, schema);
    FAIL();
  } catch (const EvaluationError& e) {
    EXPECT_NE(std::string(e.what()).find("y - 2"), std::string::npos) << e.what();
  }

  const auto unknown = make_atomic(CmpOp::Lt, make_variable("z"), make_number(0));
  EXPECT_THROW(AtomicEvaluator(*unknown, schema), MonitorError);
}

struct Case {
  TimeGrid grid;
  std::vector<double> a, b;
  std::optional<Interval> w;
};

Case random_case(testkit::Random& rng, bool boolean) {
  const std::size_t n = 1 + rng.below(8);
  std::vector<double> times;
  double t = rng.below(2) * 0.5;
  for (std::size_t i = 0; i < n; ++i, t += 0.5 * (1 + rng.below(3))) times.push_back(t);
  std::vector<double> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = boolean ? static_cast<double>(rng.below(2)) : static_cast<double>(rng.below(9)) - 4;
    b[i] = boolean ? static_cast<double>(rng.below(2)) : static_cast<double>(rng.below(9)) - 4;
  }
  std::optional<Interval> w;
  if (rng.chance(0.8)) {
    const double lo = 0.5 * rng.below(5);
    const double hi = rng.chance(0.2) ? kInf : lo + 0.5 * rng.below(6);
    w = Interval(lo, hi);
  }
  return {TimeGrid(times), a, b, w};
}

template <class D>
Values<D> to_values(const std::vector<double>& xs) {
  Values<D> out;
  for (double x : xs) out.push_back(static_cast<typename D::value_type>(x));
  return out;
}

template <class D>
std::vector<double> to_doubles(const Values<D>& xs) {
  return std::vector<double>(xs.begin(), xs.end());
}

template <class D>
void compare_with_oracle(std::uint64_t seed) {
  testkit::Random rng(seed);
  const DomainKind kind = D::kind;
  for (int i = 0; i < 400; ++i) {
    const Case c = random_case(rng, kind == DomainKind::Boolean);
    const std::vector<double> times(c.grid.points().begin(), c.grid.points().end());
    const Interval w = c.w.value_or(Interval{});
    const auto a = to_values<D>(c.a), b = to_values<D>(c.b);
    EXPECT_EQ(to_doubles<D>(monitor_until<D>(c.grid, a, b, c.w)),
              oracle::until_enum(kind, times, c.a, c.b, w));
    EXPECT_EQ(to_doubles<D>(monitor_since<D>(c.grid, a, b, c.w)),
              oracle::since_enum(kind, times, c.a, c.b, w));
    EXPECT_EQ(to_doubles<D>(eventually<D>(c.grid, a, c.w)),
              oracle::window_enum(kind, times, c.a, w, true, false));
    EXPECT_EQ(to_doubles<D>(globally<D>(c.grid, a, c.w)),
              oracle::window_enum(kind, times, c.a, w, false, false));
    EXPECT_EQ(to_doubles<D>(once<D>(c.grid, a, c.w)),
              oracle::window_enum(kind, times, c.a, w, true, true));
    EXPECT_EQ(to_doubles<D>(historically<D>(c.grid, a, c.w)),
              oracle::window_enum(kind, times, c.a, w, false, true));
  }
}

TEST(Temporal, BooleanMatchesEnumeration) { compare_with_oracle<BooleanDomain>(21); }
TEST(Temporal, MinMaxMatchesEnumeration) { compare_with_oracle<MinMaxDomain>(22); }

TEST(Temporal, TimeShiftInvariance) {
  testkit::Random rng(5);
  for (int i = 0; i < 200; ++i) {
    const Case c = random_case(rng, false);
    std::vector<double> shifted;
    for (double t : c.grid.points()) shifted.push_back(t + 3.5);
    const TimeGrid g2(shifted);
    const auto a = to_values<MinMaxDomain>(c.a), b = to_values<MinMaxDomain>(c.b);
    EXPECT_EQ(monitor_until<MinMaxDomain>(c.grid, a, b, c.w),
              monitor_until<MinMaxDomain>(g2, a, b, c.w));
    EXPECT_EQ(monitor_since<MinMaxDomain>(c.grid, a, b, c.w),
              monitor_since<MinMaxDomain>(g2, a, b, c.w));
    EXPECT_EQ(historically<MinMaxDomain>(c.grid, a, c.w), historically<MinMaxDomain>(g2, a, c.w));
  }
}

TEST(Temporal, Monotonicity) {
  testkit::Random rng(6);
  for (int i = 0; i < 200; ++i) {
    const Case c = random_case(rng, false);
    auto a = to_values<MinMaxDomain>(c.a), b = to_values<MinMaxDomain>(c.b);
    auto a2 = a, b2 = b;
    for (auto& v : a2) v += static_cast<double>(rng.below(3));
    for (auto& v : b2) v += static_cast<double>(rng.below(3));
    const auto lo = monitor_until<MinMaxDomain>(c.grid, a, b, c.w);
    const auto hi = monitor_until<MinMaxDomain>(c.grid, a2, b2, c.w);
    const auto plo = once<MinMaxDomain>(c.grid, a, c.w), phi = once<MinMaxDomain>(c.grid, a2, c.w);
    for (std::size_t t = 0; t < lo.size(); ++t) {
      EXPECT_LE(lo[t], hi[t]);
      EXPECT_LE(plo[t], phi[t]);
    }
  }
}

TEST(Temporal, LongSignalsMatchEnumeration) {
  testkit::Random rng(8);
  std::vector<double> times, a, b;
  for (int i = 0; i < 300; ++i) {
    times.push_back(0.01 * i);
    a.push_back(static_cast<double>(rng.below(21)) - 10);
    b.push_back(static_cast<double>(rng.below(21)) - 10);
  }
  const TimeGrid g(times);
  for (const Interval w : {Interval(0, 0.2), Interval(0.05, 0.5), Interval(0.1, kInf), Interval()}) {
    EXPECT_EQ(to_doubles<MinMaxDomain>(monitor_until<MinMaxDomain>(g, a, b, w)),
              oracle::until_enum(DomainKind::MinMax, times, a, b, w));
    EXPECT_EQ(to_doubles<MinMaxDomain>(globally<MinMaxDomain>(g, a, w)),
              oracle::window_enum(DomainKind::MinMax, times, a, w, false, false));
    EXPECT_EQ(to_doubles<MinMaxDomain>(monitor_since<MinMaxDomain>(g, a, b, w)),
              oracle::since_enum(DomainKind::MinMax, times, a, b, w));
  }
}

}  // namespace
}  // namespace moonlight::temporal
