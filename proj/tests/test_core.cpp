#include <gtest/gtest.h>

#include <algorithm>

#include "hodge/core.hpp"

using namespace hodge;

namespace {

HodgeProfile prof(int w, int n, AlbertType t, int deg_L, int deg_F, int q) {
  return {w, n, {t, deg_L, deg_F, q, std::nullopt, std::nullopt}};
}

bool has(const std::vector<Violation>& v, ViolationCode c) {
  return std::any_of(v.begin(), v.end(), [c](const Violation& x) { return x.code == c; });
}

}  // namespace

TEST(Validate, RationalFieldAlwaysDivides) {
  for (int n = 1; n <= 30; ++n) EXPECT_TRUE(validate_profile(prof(1, n, AlbertType::I, 1, 1, 1)).empty());
}

TEST(Validate, DegreeMustDivideTwoN) {
  auto v = validate_profile(prof(2, 3, AlbertType::I, 4, 4, 1));
  EXPECT_TRUE(has(v, ViolationCode::deg_L_not_dividing_2n));
  EXPECT_TRUE(has(v, ViolationCode::deg_F_not_dividing_n));
}

TEST(Validate, TypeIVTraceArithmetic) {
  HodgeProfile p{1, 4, {AlbertType::IV, 2, 1, 1, std::vector<TracePair>{{1, 3}}, std::nullopt}};
  EXPECT_TRUE(validate_profile(p).empty());
  EXPECT_EQ(p.m(), 4);
  p.endo.cm_traces = std::vector<TracePair>{{1, 2}};
  EXPECT_TRUE(has(validate_profile(p), ViolationCode::cm_traces_sum));
  p.endo.cm_traces = std::vector<TracePair>{{5, -1}};
  EXPECT_TRUE(has(validate_profile(p), ViolationCode::cm_traces_negative));
  p.endo.cm_traces = std::vector<TracePair>{{2, 2}, {2, 2}};
  EXPECT_TRUE(has(validate_profile(p), ViolationCode::cm_traces_length));
}

TEST(Validate, ShapeRules) {
  EXPECT_TRUE(has(validate_profile(prof(1, 4, AlbertType::I, 2, 1, 1)), ViolationCode::type_I_shape));
  EXPECT_TRUE(has(validate_profile(prof(1, 4, AlbertType::II, 4, 1, 1)), ViolationCode::quaternion_shape));
  EXPECT_TRUE(has(validate_profile(prof(1, 4, AlbertType::IV, 4, 1, 1)), ViolationCode::type_IV_shape));
  EXPECT_TRUE(has(validate_profile(prof(0, 4, AlbertType::I, 1, 1, 1)), ViolationCode::weight_nonpositive));
  EXPECT_TRUE(has(validate_profile(prof(1, 0, AlbertType::I, 1, 1, 1)), ViolationCode::n_nonpositive));
  EXPECT_TRUE(has(validate_profile(prof(1, 2, AlbertType::I, 0, 1, 1)), ViolationCode::degree_nonpositive));
  HodgeProfile p = prof(1, 2, AlbertType::I, 1, 1, 1);
  p.endo.cm_traces = std::vector<TracePair>{{1, 1}};
  EXPECT_TRUE(has(validate_profile(p), ViolationCode::cm_traces_not_type_IV));
}

TEST(Validate, DeterministicOrder) {
  auto p = prof(0, 3, AlbertType::II, 8, 1, 1);
  EXPECT_EQ(validate_profile(p), validate_profile(p));
}

// Sum of all trace pairs equals g m q for every valid type IV profile.
TEST(Validate, TraceSumInvariant) {
  for (int n = 1; n <= 12; ++n)
    for (int deg_F = 1; deg_F <= n; ++deg_F)
      for (int q = 1; q <= 2; ++q) {
        const int deg_L = 2 * deg_F * q * q;
        if ((2 * n) % deg_L || n % deg_F) continue;
        const int m = 2 * n / deg_L;
        std::vector<TracePair> t(deg_F, {m * q, 0});
        HodgeProfile p{1, n, {AlbertType::IV, deg_L, deg_F, q, t, std::nullopt}};
        ASSERT_TRUE(validate_profile(p).empty());
        int sum = 0;
        for (auto [a, b] : t) sum += a + b;
        EXPECT_EQ(sum, deg_F * m * q);
      }
}

TEST(GroupExpr, WellFormedness) {
  EXPECT_NO_THROW(check_well_formed(make_group(Family::sp, 1, 6)));
  EXPECT_THROW(check_well_formed(make_group(Family::sp, 1, 5)), PreconditionError);
  EXPECT_THROW(check_well_formed(make_group(Family::su_2k, 1, 6)), PreconditionError);
  EXPECT_THROW(check_well_formed(torus_su_le(1, 4, 4)), PreconditionError);
  EXPECT_NO_THROW(check_well_formed(torus_su_le(1, 4, 1)));
  GroupExpr g = make_group(Family::so, 0, 4);
  EXPECT_THROW(check_well_formed(g), PreconditionError);
}

TEST(GroupExpr, EqualityIsFieldwise) {
  EXPECT_EQ(make_group(Family::so7, 1, 7), make_group(Family::so7, 1, 123));
  EXPECT_NE(make_group(Family::sp, 1, 6), make_group(Family::sp, 2, 6));
}

TEST(GroupExpr, Labels) {
  EXPECT_EQ(label(make_group(Family::sp, 1, 8)), "Sp(8)");
  EXPECT_EQ(label(make_group(Family::so, 2, 4)), "R_{F/Q}SO(_FV)");
  EXPECT_EQ(label(make_group(Family::sp_b, 2, 2)), "R_{F/Q}Sp(L,-)");
  EXPECT_EQ(label(make_group(Family::o_plus_b, 1, 4)), "O+(B,-)");
  EXPECT_EQ(label(make_group(Family::su_2k, 1, 8)), "SU(8)");
  EXPECT_EQ(label(torus_su_le(1, 4, 1)), "SU_{L/E}");
}

TEST(Enums, RoundTrip) {
  for (auto t : {AlbertType::I, AlbertType::II, AlbertType::III, AlbertType::IV})
    EXPECT_EQ(parse_albert_type(to_string(t)), t);
  EXPECT_FALSE(parse_albert_type("V"));
  for (auto f : {Family::sp, Family::torus_su_le, Family::so7}) EXPECT_EQ(parse_family(to_string(f)), f);
  for (auto r : {Rep::spin, Rep::none}) EXPECT_EQ(parse_rep(to_string(r)), r);
}
