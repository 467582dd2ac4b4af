#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hodge/core.hpp"
#include "hodge/numth.hpp"

namespace hodge::rootsys {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Kind { A, B, C, D, E6, E7 };

constexpr std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    case Kind::E6: return "E6";
    case Kind::E7: return "E7";
  }
  return "?";
}

inline std::optional<Kind> parse_kind(std::string_view s) {
  for (auto k : {Kind::A, Kind::B, Kind::C, Kind::D, Kind::E6, Kind::E7})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

constexpr bool is_classical(Kind k) { return k != Kind::E6 && k != Kind::E7; }

using IntVec = std::vector<int>;
using Matrix = std::vector<IntVec>;

// cartan[i][j] = <alpha_j, alpha_i^vee>. Bourbaki numbering: alpha_l is the
// short root of B_l and the long root of C_l; D_l branches at l-2; E6/E7 have
// alpha_2 attached to alpha_4.
inline Matrix cartan_matrix(Kind kind, int l) {
  if (kind == Kind::E6) l = 6;
  if (kind == Kind::E7) l = 7;
  Matrix a(l, IntVec(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simply-laced edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (kind) {
    case Kind::A:
      for (int i = 1; i < l; ++i) link(i, i + 1);
      break;
    case Kind::B:
    case Kind::C:
      for (int i = 1; i + 1 < l; ++i) link(i, i + 1);
      if (l >= 2) {
        const bool b = kind == Kind::B;
        a[l - 1][l - 2] = b ? -2 : -1;
        a[l - 2][l - 1] = b ? -1 : -2;
      }
      break;
    case Kind::D:
      for (int i = 1; i + 2 < l; ++i) link(i, i + 1);
      if (l >= 3) {
        link(l - 2, l - 1);
        link(l - 2, l);
      }
      break;
    case Kind::E6:
    case Kind::E7:
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < l; ++i) link(i, i + 1);
      break;
  }
  return a;
}

inline bool rank_allowed(Kind kind, int l) {
  switch (kind) {
    case Kind::A:
    case Kind::C: return l >= 1;
    case Kind::B: return l >= 2;
    case Kind::D: return l >= 3;
    case Kind::E6: return l == 6;
    case Kind::E7: return l == 7;
  }
  return false;
}

// Positive roots in the simple-root basis, by closure through root strings.
inline std::vector<IntVec> positive_roots_of(const Matrix& a) {
  const int l = static_cast<int>(a.size());
  std::set<IntVec> known;
  std::vector<IntVec> layer, all;
  for (int i = 0; i < l; ++i) {
    IntVec v(l, 0);
    v[i] = 1;
    layer.push_back(v);
    known.insert(v);
  }
  while (!layer.empty()) {
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<IntVec> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < l; ++i) {
        // p = largest k with beta - k alpha_i a root; then beta + alpha_i is a
        // root iff p - <beta, alpha_i^vee> > 0.
        int p = 0;
        IntVec down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < l; ++j) pairing += beta[j] * a[i][j];
        if (p - pairing > 0) {
          IntVec up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const IntVec& x, const IntVec& y) {
    int hx = 0, hy = 0;
    for (int c : x) hx += c;
    for (int c : y) hy += c;
    return hx != hy ? hx < hy : x < y;
  });
  return all;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.size(), IntVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

struct RootSystem {
  Kind kind;
  int rank;
  Matrix cartan;
  std::vector<IntVec> positive_roots;    // simple-root basis
  std::vector<IntVec> positive_coroots;  // simple-coroot basis
};

inline RootSystem make_root_system(Kind kind, int l) {
  if (kind == Kind::E6) l = 6;
  if (kind == Kind::E7) l = 7;
  if (l < 1) throw PreconditionError("rank must be positive");
  RootSystem rs{kind, l, cartan_matrix(kind, l), {}, {}};
  rs.positive_roots = positive_roots_of(rs.cartan);
  // Coroots form the dual root system, whose Cartan matrix is the transpose.
  rs.positive_coroots = positive_roots_of(transpose(rs.cartan));
  return rs;
}

struct Weight {
  IntVec coords;  // fundamental-weight basis
  auto operator<=>(const Weight&) const = default;
};

inline Weight fundamental(const RootSystem& rs, int j) {  // 1-based
  Weight w{IntVec(rs.rank, 0)};
  w.coords.at(j - 1) = 1;
  return w;
}

inline bool is_dominant(const Weight& w) {
  return std::all_of(w.coords.begin(), w.coords.end(), [](int c) { return c >= 0; });
}

inline void check_weight(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.coords.size()) != rs.rank) throw PreconditionError("weight has wrong length");
}

// <lambda, beta^vee> for a coroot given in the simple-coroot basis.
inline std::int64_t pairing(const Weight& w, const IntVec& coroot) {
  std::int64_t s = 0;
  for (size_t i = 0; i < coroot.size(); ++i) s += static_cast<std::int64_t>(w.coords[i]) * coroot[i];
  return s;
}

// Definitional test over all roots; negative roots give the negated pairings.
inline bool is_minuscule(const RootSystem& rs, const Weight& w) {
  check_weight(rs, w);
  for (const auto& c : rs.positive_coroots) {
    auto v = pairing(w, c);
    if (v < -1 || v > 1) return false;
  }
  return true;
}

// Nonzero minuscule weights. A dominant weight pairs with the highest coroot
// (all coefficients >= 1) to at most 1, so only fundamental weights can
// qualify; each is then checked against the definition.
inline std::vector<Weight> minuscule_weights(const RootSystem& rs) {
  std::vector<Weight> out;
  for (int j = 1; j <= rs.rank; ++j) {
    Weight w = fundamental(rs, j);
    if (is_minuscule(rs, w)) out.push_back(w);
  }
  return out;
}

inline BigInt rep_dimension(const RootSystem& rs, const Weight& w) {
  check_weight(rs, w);
  if (!is_dominant(w)) throw PreconditionError("weight is not dominant");
  BigInt num = 1, den = 1;
  for (const auto& c : rs.positive_coroots) {
    std::int64_t rho = 0, lam = 0;
    for (size_t i = 0; i < c.size(); ++i) {
      rho += c[i];
      lam += static_cast<std::int64_t>(w.coords[i]) * c[i];
    }
    num *= lam + rho;
    den *= rho;
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula gave a non-integer");
  return num / den;
}

// s_i(mu) = mu - <mu, alpha_i^vee> alpha_i, in the fundamental basis.
inline void reflect(const RootSystem& rs, IntVec& mu, int i) {
  const int c = mu[i];
  for (int k = 0; k < rs.rank; ++k) mu[k] -= c * rs.cartan[k][i];
}

// -w0(lambda): the dominant element of the Weyl orbit of -lambda.
inline Weight opposite(const RootSystem& rs, const Weight& w) {
  check_weight(rs, w);
  IntVec mu(w.coords.size());
  for (size_t i = 0; i < mu.size(); ++i) mu[i] = -w.coords[i];
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rs.rank; ++i)
      if (mu[i] < 0) {
        reflect(rs, mu, i);
        moved = true;
      }
  }
  return Weight{mu};
}

// Permutation of simple roots induced by -w0 (it permutes fundamental
// weights the same way).
inline std::vector<int> opposition_involution(const RootSystem& rs) {
  std::vector<int> perm(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    auto o = opposite(rs, fundamental(rs, j + 1));
    perm[j] = static_cast<int>(std::find(o.coords.begin(), o.coords.end(), 1) - o.coords.begin());
  }
  return perm;
}

enum class Duality { orthogonal, symplectic, non_self_dual };

constexpr std::string_view to_string(Duality d) {
  switch (d) {
    case Duality::orthogonal: return "orthogonal";
    case Duality::symplectic: return "symplectic";
    case Duality::non_self_dual: return "non_self_dual";
  }
  return "?";
}

inline std::optional<Duality> parse_duality(std::string_view s) {
  for (auto d : {Duality::orthogonal, Duality::symplectic, Duality::non_self_dual})
    if (to_string(d) == s) return d;
  return std::nullopt;
}

// Self-dual iff -w0(lambda) = lambda; the invariant form is then symmetric iff
// <lambda, 2 rho^vee> (sum over positive coroots) is even.
inline Duality autoduality(const RootSystem& rs, const Weight& w) {
  if (!is_dominant(w) || !is_minuscule(rs, w)) throw PreconditionError("weight is not minuscule");
  if (opposite(rs, w) != w) return Duality::non_self_dual;
  std::int64_t h = 0;
  for (const auto& c : rs.positive_coroots) h += pairing(w, c);
  return h % 2 == 0 ? Duality::orthogonal : Duality::symplectic;
}

// Coordinates of lambda in the simple-root basis: solve cartan * c = lambda.
inline std::vector<Rational> root_coordinates(const RootSystem& rs, const Weight& w) {
  check_weight(rs, w);
  const int l = rs.rank;
  std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l + 1));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[i][j] = rs.cartan[i][j];
    m[i][l] = w.coords[i];
  }
  for (int col = 0; col < l; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    for (int r = 0; r < l; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int k = col; k <= l; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<Rational> c(l);
  for (int i = 0; i < l; ++i) c[i] = m[i][l] / m[i][i];
  return c;
}

inline Rational weight_length(const RootSystem& rs, const Weight& w) {
  if (!is_dominant(w)) throw PreconditionError("weight is not dominant");
  auto c = root_coordinates(rs, w);
  auto perm = opposition_involution(rs);
  std::optional<Rational> best;
  for (int i = 0; i < rs.rank; ++i) {
    Rational v = c[i] + c[perm[i]];
    if (!best || v < *best) best = v;
  }
  return *best;
}

struct Factor {
  Kind kind;
  int rank;
  Weight weight;
  BigInt dimension;
  Duality duality;
  auto operator<=>(const Factor& o) const {
    if (auto c = kind <=> o.kind; c != 0) return c;
    if (auto c = rank <=> o.rank; c != 0) return c;
    return weight <=> o.weight;
  }
  bool operator==(const Factor& o) const { return (*this <=> o) == 0; }
};

inline int fundamental_index(const Weight& w) {
  for (size_t i = 0; i < w.coords.size(); ++i)
    if (w.coords[i] != 0) return static_cast<int>(i) + 1;
  return 0;
}

// Every classical (kind, minuscule weight) pair of the given dimension and
// duality, subject to the restrictions on self-dual and dim = 2 mod 4 factors.
inline std::vector<Factor> admissible_factors(std::uint64_t dim, Duality duality, int max_rank = 16) {
  if (dim < 1) throw PreconditionError("dimension must be positive");
  std::vector<Factor> out;
  const bool self_dual = duality != Duality::non_self_dual;
  if (self_dual && dim % 2) return out;
  for (auto kind : {Kind::A, Kind::B, Kind::C, Kind::D}) {
    for (int l = 1; l <= max_rank; ++l) {
      if (!rank_allowed(kind, l)) continue;
      auto rs = make_root_system(kind, l);
      for (auto& w : minuscule_weights(rs)) {
        auto d = rep_dimension(rs, w);
        if (d != dim || autoduality(rs, w) != duality) continue;
        const int j = fundamental_index(w);
        if (dim % 4 == 2 && duality == Duality::symplectic && !(kind == Kind::C && j == 1 && l % 2 == 1))
          continue;
        if (dim % 4 == 2 && duality == Duality::orthogonal) {
          const bool d_std = kind == Kind::D && j == 1 && l % 2 == 1;
          const bool a_mid = kind == Kind::A && numth::is_power_of_two(l + 1) && l + 1 >= 8 && 2 * j == l + 1;
          if (!d_std && !a_mid) continue;
        }
        out.push_back({kind, l, w, d, duality});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Table of minuscule representations: closed-form dimension and sign.
struct Table2Entry {
  Kind kind;
  int rank;
  int j;  // fundamental weight index, 1-based
  BigInt dimension;
  Duality duality;
};

inline std::vector<Table2Entry> table2_catalog(int max_rank) {
  std::vector<Table2Entry> out;
  auto pow2 = [](int e) { return BigInt(1) << e; };
  for (int l = 1; l <= max_rank; ++l) {
    for (int j = 1; j <= l; ++j) {
      Duality d = Duality::non_self_dual;
      if (l == 2 * j - 1) d = j % 2 ? Duality::symplectic : Duality::orthogonal;
      out.push_back({Kind::A, l, j, numth::binomial(l + 1, j), d});
    }
    if (l >= 2)
      out.push_back({Kind::B, l, l, pow2(l), (l % 4 == 0 || l % 4 == 3) ? Duality::orthogonal : Duality::symplectic});
    out.push_back({Kind::C, l, 1, BigInt(2 * l), Duality::symplectic});
    if (l >= 3) {
      out.push_back({Kind::D, l, 1, BigInt(2 * l), Duality::orthogonal});
      Duality d = l % 2 ? Duality::non_self_dual : (l % 4 == 0 ? Duality::orthogonal : Duality::symplectic);
      out.push_back({Kind::D, l, l - 1, pow2(l - 1), d});
      out.push_back({Kind::D, l, l, pow2(l - 1), d});
    }
  }
  out.push_back({Kind::E6, 6, 1, BigInt(27), Duality::non_self_dual});
  out.push_back({Kind::E6, 6, 6, BigInt(27), Duality::non_self_dual});
  out.push_back({Kind::E7, 7, 7, BigInt(56), Duality::symplectic});
  return out;
}

struct Table2Check {
  Table2Entry expected;
  BigInt dimension;
  Duality duality;
  bool minuscule;
  bool ok;
};

struct Table2Report {
  std::vector<Table2Check> checks;
  std::vector<std::string> set_mismatches;  // "kind rank" where the computed minuscule set differs
  bool all_ok = true;
};

inline Table2Report verify_table2(int max_rank) {
  Table2Report rep;
  std::map<std::pair<Kind, int>, std::set<int>> expected_sets;
  for (const auto& e : table2_catalog(max_rank)) {
    auto rs = make_root_system(e.kind, e.rank);
    Weight w = fundamental(rs, e.j);
    Table2Check c{e, rep_dimension(rs, w), Duality::non_self_dual, is_minuscule(rs, w), false};
    if (c.minuscule) c.duality = autoduality(rs, w);
    c.ok = c.minuscule && c.dimension == e.dimension && c.duality == e.duality;
    rep.all_ok &= c.ok;
    rep.checks.push_back(std::move(c));
    expected_sets[{e.kind, e.rank}].insert(e.j);
  }
  for (const auto& [key, js] : expected_sets) {
    std::set<int> got;
    for (const auto& w : minuscule_weights(make_root_system(key.first, key.second))) got.insert(fundamental_index(w));
    if (got != js) {
      rep.set_mismatches.push_back(std::string(to_string(key.first)) + " " + std::to_string(key.second));
      rep.all_ok = false;
    }
  }
  return rep;
}

}  // namespace hodge::rootsys
