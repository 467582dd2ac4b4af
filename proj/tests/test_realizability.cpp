#include <gtest/gtest.h>

#include <functional>

#include "hodge/realizability.hpp"

using namespace hodge;

namespace {

using Traces = std::optional<std::vector<TracePair>>;

HodgeProfile prof(int w, int n, AlbertType t, int deg_L, int deg_F, int q, Traces tr = std::nullopt,
                  std::optional<bool> disc = std::nullopt) {
  return {w, n, {t, deg_L, deg_F, q, tr, disc}};
}

// Brute force over trace completions: true iff every completion is definitely exceptional.
bool all_completions_exceptional(HodgeProfile p) {
  const int g = p.endo.deg_F, s = p.m() * p.endo.q;
  std::vector<TracePair> cur;
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == g) {
      p.endo.cm_traces = cur;
      auto m = is_exceptional(p);
      return m && !m->conditional;
    }
    for (int a = 0; a <= s; ++a) {
      cur.push_back({a, s - a});
      bool r = rec(i + 1);
      cur.pop_back();
      if (!r) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace

TEST(Catalog, Sizes) {
  EXPECT_EQ(odd_exceptional_cases.size(), 5u);
  EXPECT_EQ(even_exceptional_cases.size(), 7u);
}

TEST(Exceptional, Examples) {
  auto m = is_exceptional(prof(1, 2, AlbertType::III, 4, 1, 2));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->kase.index, 1);
  EXPECT_EQ(m->kase.parity, Parity::odd);

  m = is_exceptional(prof(2, 2, AlbertType::I, 2, 2, 1));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->kase.index, 6);

  for (int n = 1; n <= 12; ++n) EXPECT_FALSE(is_exceptional(prof(1, n, AlbertType::I, 1, 1, 1, {}, true)));

  m = is_exceptional(prof(2, 4, AlbertType::IV, 4, 2, 1, std::vector<TracePair>{{1, 1}, {1, 1}}));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->kase.index, 4);
  EXPECT_EQ(m->kase.parity, Parity::even);
}

TEST(Exceptional, InvalidProfileThrows) {
  EXPECT_THROW(is_exceptional(prof(1, 3, AlbertType::I, 4, 4, 1)), PreconditionError);
}

TEST(Exceptional, ConditionalMarker) {
  auto m = is_exceptional(prof(1, 4, AlbertType::III, 4, 1, 2));
  ASSERT_TRUE(m);
  EXPECT_TRUE(m->conditional);
  EXPECT_EQ(m->kase.index, 2);
  auto r = realizable(prof(1, 4, AlbertType::III, 4, 1, 2));
  EXPECT_FALSE(r.realizable.has_value());
}

TEST(Realizable, Examples) {
  auto r = realizable(prof(1, 3, AlbertType::IV, 6, 3, 1, std::vector<TracePair>{{1, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(r.realizable, true);
  r = realizable(prof(2, 1, AlbertType::I, 1, 1, 1));
  EXPECT_EQ(r.realizable, false);
  ASSERT_TRUE(r.match);
  EXPECT_EQ(r.match->kase.index, 6);
  EXPECT_EQ(realizable(prof(1, 1, AlbertType::I, 1, 1, 1)).realizable, true);
  r = realizable(prof(1, 3, AlbertType::I, 4, 4, 1));
  EXPECT_EQ(r.realizable, false);
  EXPECT_FALSE(r.violations.empty());
}

// Cases (3)-(5) read the same in both parities.
TEST(Realizable, TypeIVCasesParityIndependent) {
  for (int n = 1; n <= 8; ++n)
    for (int deg_F = 1; deg_F <= 4; ++deg_F)
      for (int q = 1; q <= 2; ++q) {
        const int deg_L = 2 * deg_F * q * q;
        auto p = prof(1, n, AlbertType::IV, deg_L, deg_F, q);
        if (!validate_profile(p).empty()) continue;
        const int s = p.m() * q;
        for (int a = 0; a <= s; ++a) {
          p.endo.cm_traces = std::vector<TracePair>(deg_F, {a, s - a});
          auto odd = is_exceptional(p);
          p.weight = 2;
          auto even = is_exceptional(p);
          p.weight = 1;
          ASSERT_EQ(odd.has_value(), even.has_value());
          if (odd) {
            EXPECT_EQ(odd->kase.index, even->kase.index);
          }
        }
      }
}

TEST(Realizable, DependsOnlyOnParity) {
  for (int w : {1, 3, 5}) {
    EXPECT_EQ(realizable(prof(w, 2, AlbertType::III, 4, 1, 2)).realizable,
              realizable(prof(1, 2, AlbertType::III, 4, 1, 2)).realizable);
    EXPECT_EQ(realizable(prof(w + 1, 2, AlbertType::I, 1, 1, 1, {}, true)).realizable,
              realizable(prof(2, 2, AlbertType::I, 1, 1, 1, {}, true)).realizable);
  }
}

// The shortcut for omitted traces agrees with enumerating every completion.
TEST(Realizable, TraceCompletionShortcutMatchesBruteForce) {
  for (int w : {1, 2})
    for (int n = 1; n <= 8; ++n)
      for (int deg_F = 1; deg_F <= 4; ++deg_F)
        for (int q = 1; q <= 2; ++q) {
          auto p = prof(w, n, AlbertType::IV, 2 * deg_F * q * q, deg_F, q);
          if (!validate_profile(p).empty()) continue;
          EXPECT_EQ(every_trace_completion_exceptional(p), all_completions_exceptional(p))
              << "n=" << n << " deg_F=" << deg_F << " q=" << q;
        }
}
