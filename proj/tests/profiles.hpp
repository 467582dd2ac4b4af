#pragma once

// Random valid, not-unrealizable profiles with commutative endomorphism
// algebra (Type I, or Type IV with q = 1).

#include <random>
#include <vector>

#include "hodge/realizability.hpp"

namespace profiles {

using namespace hodge;

inline std::vector<HodgeProfile> random_commutative(std::size_t count, std::uint32_t seed, int max_n = 16) {
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<HodgeProfile> out;
  while (out.size() < count) {
    HodgeProfile p;
    p.weight = pick(1, 4);
    p.n = pick(1, max_n);
    auto& e = p.endo;
    if (pick(0, 1)) {
      e.type = AlbertType::I;
      e.deg_L = pick(1, p.n);
      e.deg_F = e.deg_L;
    } else {
      e.type = AlbertType::IV;
      e.deg_L = 2 * pick(1, p.n);
      e.deg_F = e.deg_L / 2;
      if (2 * p.n % e.deg_L == 0 && pick(0, 2)) {
        const int m = 2 * p.n / e.deg_L;
        std::vector<TracePair> t;
        for (int i = 0; i < e.deg_F; ++i) {
          const int a = pick(0, m);
          t.push_back({a, m - a});
        }
        e.cm_traces = t;
      }
    }
    if (pick(0, 1)) e.disc_one = pick(0, 1) == 1;
    if (!validate_profile(p).empty()) continue;
    auto r = realizable(p);
    if (r.realizable && !*r.realizable) continue;
    out.push_back(p);
  }
  return out;
}

// Every descriptor shape for dimension n and the given weight that is valid
// and not definitely unrealizable. Trace data is enumerated in full when there
// are at most 64 completions, and otherwise omitted.
inline std::vector<HodgeProfile> all_shapes(int n, int weight) {
  std::vector<HodgeProfile> raw;
  auto with_disc = [&](HodgeProfile p) {
    for (std::optional<bool> d : {std::optional<bool>{}, std::optional<bool>{false}, std::optional<bool>{true}}) {
      p.endo.disc_one = d;
      raw.push_back(p);
    }
  };
  for (int f = 1; f <= n; ++f) {
    if (n % f) continue;
    with_disc({weight, n, {AlbertType::I, f, f, 1, std::nullopt, std::nullopt}});
    with_disc({weight, n, {AlbertType::II, 4 * f, f, 2, std::nullopt, std::nullopt}});
    with_disc({weight, n, {AlbertType::III, 4 * f, f, 2, std::nullopt, std::nullopt}});
    for (int q = 1; 2 * f * q * q <= 2 * n; ++q) {
      const int deg_L = 2 * f * q * q;
      if ((2 * n) % deg_L) continue;
      const int sum = (2 * n / deg_L) * q;
      HodgeProfile p{weight, n, {AlbertType::IV, deg_L, f, q, std::nullopt, std::nullopt}};
      with_disc(p);
      double count = 1;
      for (int i = 0; i < f; ++i) count *= sum + 1;
      if (count > 64) continue;
      std::vector<int> a(f, 0);
      while (true) {
        std::vector<TracePair> t;
        for (int x : a) t.push_back({x, sum - x});
        p.endo.cm_traces = t;
        raw.push_back(p);
        int i = 0;
        while (i < f && ++a[i] > sum) a[i++] = 0;
        if (i == f) break;
      }
    }
  }
  std::vector<HodgeProfile> out;
  for (auto& p : raw) {
    if (!validate_profile(p).empty()) continue;
    auto r = realizable(p);
    if (r.realizable && !*r.realizable) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace profiles
