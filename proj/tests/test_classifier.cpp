#include <gtest/gtest.h>

#include "golden.hpp"
#include "grid.hpp"
#include "hodge/classifier.hpp"
#include "hodge/lefschetz.hpp"
#include "profiles.hpp"

using namespace hodge;

namespace {

HodgeProfile prof(int w, int n, AlbertType t, int deg_L, int deg_F, int q = 1,
                  std::optional<std::vector<TracePair>> traces = std::nullopt) {
  EndomorphismDescriptor e;
  e.type = t;
  e.deg_L = deg_L;
  e.deg_F = deg_F;
  e.q = q;
  e.cm_traces = std::move(traces);
  return {w, n, e};
}

std::vector<Family> families(const ClassificationOutcome& o) {
  std::vector<Family> f;
  for (const auto& c : o.candidates) f.push_back(c.group.family);
  return f;
}

}  // namespace

TEST(Classify, PrimeDimensionTypeI) {
  auto o = classify(prof(1, 3, AlbertType::I, 1, 1));
  EXPECT_EQ(o.status, Status::determined);
  EXPECT_EQ(o.applied_rule, "prime-dimension");
  ASSERT_EQ(o.candidates.size(), 1u);
  EXPECT_EQ(o.candidates[0].group, make_group(Family::sp, 1, 6));
}

TEST(Classify, DimensionFourRational) {
  HodgeProfile p = prof(2, 4, AlbertType::I, 1, 1);
  p.endo.disc_one = false;
  auto o = classify(p);
  EXPECT_EQ(o.status, Status::determined);
  EXPECT_EQ(families(o), (std::vector<Family>{Family::so, Family::so7}));
  for (const auto& c : o.candidates) EXPECT_EQ(c.occurs, Occurs::proven);
  p.weight = 1;
  EXPECT_EQ(families(classify(p)), (std::vector<Family>{Family::sp, Family::sl2_x_so4}));
}

TEST(Classify, TwicePrimeTotallyRealQuadratic) {
  HodgeProfile p = prof(2, 6, AlbertType::I, 2, 2);
  p.endo.disc_one = false;
  auto o = classify(p);
  EXPECT_EQ(o.applied_rule, "twice-prime-dimension");
  ASSERT_EQ(o.candidates.size(), 1u);
  EXPECT_EQ(o.candidates[0].group, lefschetz_group(p));
  EXPECT_EQ(o.candidates[0].group.family, Family::so);
}

TEST(Classify, TwicePrimeGaloisTorus) {
  auto p = prof(1, 6, AlbertType::IV, 12, 6);
  auto o = classify(p, {{2, true, true}});
  EXPECT_EQ(o.status, Status::determined);
  ASSERT_EQ(o.candidates.size(), 1u);
  EXPECT_EQ(o.candidates[0].group, torus_su_le(1, 6, 1));
  EXPECT_EQ(group_rank(o.candidates[0].group), 5);
  // Galois flag unknown: conditional.
  auto c = classify(p, {{2, true, std::nullopt}});
  EXPECT_EQ(c.status, Status::conditional);
  EXPECT_EQ(c.candidates.size(), 2u);
}

TEST(Classify, DimensionFourImaginaryQuadraticBalanced) {
  auto o = classify(prof(2, 4, AlbertType::IV, 2, 1, 1, std::vector<TracePair>{{2, 2}}));
  EXPECT_EQ(o.status, Status::determined);
  ASSERT_EQ(o.candidates.size(), 1u);
  EXPECT_EQ(o.candidates[0].group, make_group(Family::su_b, 1, 4));
  auto u = classify(prof(2, 4, AlbertType::IV, 2, 1, 1, std::vector<TracePair>{{1, 3}}));
  EXPECT_EQ(families(u), std::vector<Family>{Family::u_b});
  auto unknown = classify(prof(2, 4, AlbertType::IV, 2, 1));
  EXPECT_EQ(unknown.status, Status::conditional);
  EXPECT_EQ(families(unknown), (std::vector<Family>{Family::u_b, Family::su_b}));
}

TEST(Classify, GeneralRules) {
  // n = 9, L = Q: n/deg_L odd.
  auto a = classify(prof(1, 9, AlbertType::I, 1, 1));
  EXPECT_EQ(a.applied_rule, "totally-real-odd-quotient");
  // n = 8, deg_L = 4: quotient two.
  auto b = classify(prof(1, 8, AlbertType::I, 4, 4));
  EXPECT_EQ(b.applied_rule, "totally-real-quotient-two");
  auto c = classify(prof(1, 9, AlbertType::IV, 2, 1, 1, std::vector<TracePair>{{4, 5}}));
  EXPECT_EQ(c.applied_rule, "imaginary-quadratic-coprime");
  EXPECT_EQ(c.status, Status::determined);
}

TEST(Classify, NotRealizableThrows) {
  // Type I, deg_L = n at even weight with m = 2 is an exceptional case.
  HodgeProfile p = prof(2, 3, AlbertType::I, 3, 3);
  auto r = realizable(p);
  ASSERT_TRUE(r.realizable.has_value());
  ASSERT_FALSE(*r.realizable);
  EXPECT_THROW(classify(p), PreconditionError);
  EXPECT_THROW(classify(prof(1, 0, AlbertType::I, 1, 1)), PreconditionError);
}

TEST(Classify, OutOfScopeReportsUpperBound) {
  // n = 8, Type IV over an imaginary quadratic field with no balance data.
  auto p = prof(1, 8, AlbertType::IV, 2, 1, 1, std::vector<TracePair>{{2, 6}});
  auto o = classify(p);
  EXPECT_EQ(o.status, Status::out_of_scope);
  ASSERT_EQ(o.candidates.size(), 1u);
  EXPECT_EQ(o.candidates[0].group, lefschetz_group(p));
  EXPECT_EQ(o.candidates[0].occurs, Occurs::possible);
}

TEST(Classify, MissingSubfieldDataIsConditional) {
  auto o = classify(prof(1, 6, AlbertType::IV, 2, 1));
  EXPECT_EQ(o.status, Status::conditional);
  EXPECT_EQ(o.applied_rule, "type-iv-missing-subfield-data");
  EXPECT_GE(o.candidates.size(), 2u);
}

// The theorem-literal answer for n = 6, [L:Q] = 6 with a balanced quadratic
// subfield sits below the rank bound; it is kept and flagged.
TEST(Classify, TwicePrimeDegreeSixRankConflictPinned) {
  auto p = prof(1, 6, AlbertType::IV, 6, 3);
  auto o = classify(p, {{2, true, std::nullopt}});
  ASSERT_EQ(o.candidates.size(), 1u);
  EXPECT_EQ(o.candidates[0].group, make_group(Family::su_b, 3, 2));
  EXPECT_EQ(group_rank(o.candidates[0].group), 3);
  bool flagged = false;
  for (const auto& n : o.notes) flagged |= n.rfind("rank bound conflict", 0) == 0;
  EXPECT_TRUE(flagged);
  // Without subfield data the speculative alternative is pruned.
  auto bare = classify(p);
  EXPECT_EQ(bare.status, Status::out_of_scope);
  ASSERT_FALSE(bare.notes.empty());
}

TEST(Classify, SubfieldsIgnoredOutsideTypeIV) {
  auto o = classify(prof(1, 3, AlbertType::I, 1, 1), {{2, true, std::nullopt}});
  EXPECT_EQ(o.notes.back(), "subfield data ignored for types I to III");
}

TEST(SuConstraint, Examples) {
  EXPECT_TRUE(su_constraint(prof(1, 4, AlbertType::IV, 2, 1, 1, std::vector<TracePair>{{2, 2}}), {2, true, std::nullopt}));
  EXPECT_FALSE(su_constraint(prof(1, 4, AlbertType::IV, 2, 1, 1, std::vector<TracePair>{{1, 3}}), {2, false, std::nullopt}));
  EXPECT_TRUE(su_constraint(prof(1, 4, AlbertType::IV, 4, 2, 1, std::vector<TracePair>{{1, 1}, {1, 1}}), {4, true, std::nullopt}));
  EXPECT_THROW(su_constraint(prof(1, 4, AlbertType::IV, 2, 1, 1, std::vector<TracePair>{{1, 3}}), {2, true, std::nullopt}),
               PreconditionError);
  EXPECT_THROW(su_constraint(prof(1, 4, AlbertType::IV, 2, 1), {3, false, std::nullopt}), PreconditionError);
  EXPECT_THROW(su_constraint(prof(1, 4, AlbertType::IV, 2, 1), {4, false, std::nullopt}), PreconditionError);
  EXPECT_THROW(su_constraint(prof(1, 3, AlbertType::I, 1, 1), {2, false, std::nullopt}), PreconditionError);
}

TEST(Sl2Product, Examples) {
  EXPECT_TRUE(exclude_sl2_product({{{ClassicalKind::SO, 6}}}));
  EXPECT_FALSE(exclude_sl2_product({{{ClassicalKind::SO, 4}}}));
  EXPECT_TRUE(exclude_sl2_product({{{ClassicalKind::Sp, 4}}}));
  EXPECT_TRUE(exclude_sl2_product({{{ClassicalKind::SL, 8}}}));
  EXPECT_THROW(exclude_sl2_product({{}}), PreconditionError);
  EXPECT_THROW(exclude_sl2_product({{{ClassicalKind::SO, 2}}}), PreconditionError);
}

TEST(DimensionFourTable, RowsMatchTranscription) {
  auto rows = table3_rows();
  auto golden = golden_lines("table3.md");
  ASSERT_EQ(rows.size() + 2, golden.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::string line = "| " + r.type + " | " + std::to_string(r.deg_L) + " | " + r.odd + " | " + r.even + " | " +
                       (r.lefschetz ? "Yes" : "No") + " |";
    EXPECT_EQ(line, golden[i + 2]);
  }
}

TEST(TwicePrimeGrid, MatchesGolden) { EXPECT_EQ(grid::lines(), golden_lines("twice_prime_grid.txt")); }

TEST(Properties, PrimeAndOneTotality) {
  for (int n : {1, 2, 3, 5, 7, 11, 13, 29, 97})
    for (int w : {1, 2}) {
      auto shapes = profiles::all_shapes(n, w);
      EXPECT_FALSE(shapes.empty());
      for (const auto& p : shapes) {
        auto o = classify(p);
        ASSERT_EQ(o.candidates.size(), 1u);
        EXPECT_EQ(o.candidates[0].group, lefschetz_group(p));
      }
    }
}

TEST(Properties, RankBoundAndLefschetzSoundness) {
  for (const auto& p : profiles::random_commutative(300, 11)) {
    auto o = classify(p);
    const auto lef = lefschetz_group(p);
    if (o.status == Status::determined) {
      EXPECT_FALSE(o.candidates.empty());
    }
    for (const auto& c : o.candidates) {
      EXPECT_GE(group_rank(c.group), static_cast<std::int64_t>(numth::ceil_log2(2 * p.n)));
      EXPECT_LE(group_rank(c.group), group_rank(lef));
      EXPECT_LE(group_dim(c.group), group_dim(lef));
      EXPECT_NO_THROW(check_well_formed(c.group));
    }
  }
}

TEST(Properties, Deterministic) {
  for (const auto& p : profiles::random_commutative(50, 5)) EXPECT_EQ(classify(p), classify(p));
}
