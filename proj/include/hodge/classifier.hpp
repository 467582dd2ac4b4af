#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hodge/core.hpp"
#include "hodge/lefschetz.hpp"
#include "hodge/numth.hpp"
#include "hodge/realizability.hpp"

namespace hodge {

// A CM subfield E of L. `balanced` says V is an E-Hodge structure whose Hodge
// numbers are equal on every embedding of E.
struct SubfieldDescriptor {
  int deg_E = 2;
  bool balanced = false;
  std::optional<bool> galois_L;
  bool operator==(const SubfieldDescriptor&) const = default;
};

enum class Status { determined, conditional, out_of_scope };
enum class Occurs { proven, possible };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::determined: return "determined";
    case Status::conditional: return "conditional";
    case Status::out_of_scope: return "out_of_scope";
  }
  return "?";
}

constexpr std::string_view to_string(Occurs o) { return o == Occurs::proven ? "proven" : "possible"; }

struct Candidate {
  GroupExpr group;
  std::string condition;
  Occurs occurs = Occurs::possible;
  bool operator==(const Candidate&) const = default;
};

struct ClassificationOutcome {
  Status status = Status::out_of_scope;
  std::vector<Candidate> candidates;
  std::string applied_rule;
  std::vector<std::string> notes;
  bool operator==(const ClassificationOutcome&) const = default;
};

// True iff Hg(V) lies in the special unitary group of the centralizer of E,
// which happens exactly when V is balanced over E.
inline bool su_constraint(const HodgeProfile& p, const SubfieldDescriptor& E) {
  require_valid(p);
  const auto& e = p.endo;
  if (E.deg_E < 2 || E.deg_E % 2) throw PreconditionError("inconsistent degrees: deg_E must be even and positive");
  if (e.deg_L % E.deg_E) throw PreconditionError("inconsistent degrees: deg_E does not divide deg_L");
  if (e.type == AlbertType::I) throw PreconditionError("inconsistent degrees: a totally real L has no CM subfield");
  if (E.balanced && (2 * p.n / E.deg_E) % 2)
    throw PreconditionError("inconsistent degrees: a balanced E needs even dimension over E");
  if (E.deg_E == e.deg_L && e.q == 1 && e.cm_traces) {
    const bool equal = std::all_of(e.cm_traces->begin(), e.cm_traces->end(),
                                   [](TracePair t) { return t.first == t.second; });
    if (equal != E.balanced) throw PreconditionError("inconsistent subfield: balance contradicts cm_traces");
  }
  return E.balanced;
}

enum class ClassicalKind { SO, Sp, SL };

struct SimpleFactor {
  ClassicalKind kind;
  int size;
};

// SL(2) x G acting by standard (x) rep(G); `partner` lists the simple
// factors of G.
struct Sl2Product {
  std::vector<SimpleFactor> partner;
};

// True when no simple polarizable V with Hodge numbers (n,...,n) has this
// Hodge group. Only applies when G has no SL(2)-type factor.
inline bool exclude_sl2_product(const Sl2Product& c) {
  if (c.partner.empty()) throw PreconditionError("pattern mismatch: G must be nontrivial");
  bool has_a1 = false;
  for (auto f : c.partner) {
    switch (f.kind) {
      case ClassicalKind::SO:
        if (f.size < 3) throw PreconditionError("pattern mismatch: SO(n) with n < 3 is not semisimple");
        has_a1 |= f.size == 3 || f.size == 4;
        break;
      case ClassicalKind::Sp:
        if (f.size < 2 || f.size % 2) throw PreconditionError("pattern mismatch: Sp needs even size");
        has_a1 |= f.size == 2;
        break;
      case ClassicalKind::SL:
        if (f.size < 2) throw PreconditionError("pattern mismatch: SL(1) is trivial");
        has_a1 |= f.size == 2;
        break;
    }
  }
  return !has_a1;
}

namespace detail {

inline bool is_odd_prime(int p) { return p > 2 && numth::is_prime(static_cast<std::uint64_t>(p)); }

inline bool commutative_L(const HodgeProfile& p) {
  return p.endo.type == AlbertType::I || (p.endo.type == AlbertType::IV && p.endo.q == 1);
}

inline bool meets_rank_bound(const HodgeProfile& p, const GroupExpr& g) {
  return group_rank(g) >= static_cast<std::int64_t>(numth::ceil_log2(2 * static_cast<std::uint64_t>(p.n)));
}

inline std::string rank_bound_text(const HodgeProfile& p, const GroupExpr& g) {
  return label(g) + " has rank " + std::to_string(group_rank(g)) + " below ceil(log2(2n)) = " +
         std::to_string(numth::ceil_log2(2 * static_cast<std::uint64_t>(p.n)));
}

inline Candidate lef(const HodgeProfile& p, std::string cond = "", Occurs o = Occurs::proven) {
  return {lefschetz_group(p), std::move(cond), o};
}

inline ClassificationOutcome only_lef(const HodgeProfile& p, std::string rule) {
  return {Status::determined, {lef(p)}, std::move(rule), {}};
}

inline ClassificationOutcome upper_bound(const HodgeProfile& p, std::string note) {
  ClassificationOutcome o{Status::out_of_scope, {lef(p, "upper bound Hg(V) in Lef(V)", Occurs::possible)},
                          "lefschetz-upper-bound", {}};
  if (!note.empty()) o.notes.push_back(std::move(note));
  return o;
}

// Appends the SU(2^k) alternative when target = C(2^k, 2^(k-1)) is solvable.
inline void su_2k_option(ClassificationOutcome& o, std::uint64_t target, int base, const std::string& what,
                         Occurs occurs) {
  if (auto k = numth::central_binomial_solve(target, 64)) {
    o.candidates.push_back({make_group(Family::su_2k, base, 1 << *k),
                            what + " = " + std::to_string(target) + " = C(2^" + std::to_string(*k) + ", 2^" +
                                std::to_string(*k - 1) + ")",
                            occurs});
  } else {
    o.notes.push_back("SU(2^k) alternative dropped: " + what + " = " + std::to_string(target) +
                      " is not C(2^k, 2^(k-1)) for any k >= 3");
  }
}

inline std::string strike_note(const std::string& name) {
  return name + " struck: SL(2) times a group without SL(2) factors is never a Hodge group here";
}

inline std::optional<ClassificationOutcome> type_i_general(const HodgeProfile& p) {
  const auto& e = p.endo;
  const bool odd = p.parity() == Parity::odd;
  const int l = p.n / e.deg_L;
  if (l % 2 == 1) {
    auto o = only_lef(p, "totally-real-odd-quotient");
    if (!odd) su_2k_option(o, 2 * static_cast<std::uint64_t>(l), e.deg_L, "2l", Occurs::proven);
    return o;
  }
  if (l == 2) return only_lef(p, "totally-real-quotient-two");
  if (e.deg_L == 1 && p.n % 4 == 2) {
    auto o = only_lef(p, "rational-twice-odd");
    if (odd) {
      if (exclude_sl2_product({{{ClassicalKind::SO, p.n}}}))
        o.notes.push_back(strike_note("SL(2)xSO(" + std::to_string(p.n) + ")"));
      if (auto k = numth::central_binomial_solve(static_cast<std::uint64_t>(p.n), 64)) {
        if (exclude_sl2_product({{{ClassicalKind::SL, 1 << *k}}}))
          o.notes.push_back(strike_note("SL(2)xSL(" + std::to_string(1 << *k) + ")"));
      }
    } else {
      su_2k_option(o, 2 * static_cast<std::uint64_t>(p.n), 1, "2n", Occurs::proven);
      if (exclude_sl2_product({{{ClassicalKind::SO, p.n}}}))
        o.notes.push_back(strike_note("SU(2)xSO(" + std::to_string(p.n) + ")"));
    }
    return o;
  }
  return std::nullopt;
}

inline std::optional<ClassificationOutcome> quaternion_general(const HodgeProfile& p) {
  const auto& e = p.endo;
  const bool odd = p.parity() == Parity::odd;
  const int m = p.m();
  // Type II even and type III odd carry the orthogonal Lefschetz group.
  const bool orthogonal = (e.type == AlbertType::II) != odd;
  if (m % 2 == 1) {
    auto o = only_lef(p, "quaternion-odd-m");
    if (orthogonal) su_2k_option(o, 2 * static_cast<std::uint64_t>(m), e.deg_F, "2m", Occurs::proven);
    return o;
  }
  if (m == 2) return only_lef(p, "quaternion-m-two");
  if (e.deg_F == 1 && p.n % 8 == 4) {
    auto o = only_lef(p, "rational-quaternion-four-times-odd");
    if (orthogonal) su_2k_option(o, static_cast<std::uint64_t>(p.n), 1, "n", Occurs::proven);
    return o;
  }
  return std::nullopt;
}

struct SubfieldView {
  const HodgeProfile& p;
  const std::vector<SubfieldDescriptor>& subs;

  bool traces_all_equal() const {
    const auto& t = p.endo.cm_traces;
    return t && std::all_of(t->begin(), t->end(), [](TracePair x) { return x.first == x.second; });
  }
  bool traces_all_coprime() const {
    const auto& t = p.endo.cm_traces;
    return t && std::all_of(t->begin(), t->end(), [](TracePair x) { return std::gcd(x.first, x.second) == 1; });
  }
  const SubfieldDescriptor* balanced(int deg) const {
    for (const auto& s : subs)
      if (s.deg_E == deg && s.balanced) return &s;
    return nullptr;
  }
  bool balanced_of_degree(int deg) const {
    if (balanced(deg)) return true;
    return deg == p.endo.deg_L && p.endo.q == 1 && traces_all_equal();
  }
  bool any_balanced() const {
    for (const auto& s : subs)
      if (s.balanced) return true;
    return p.endo.q == 1 && traces_all_equal();
  }
  std::optional<bool> galois() const {
    if (auto s = balanced(2); s && s->galois_L) return s->galois_L;
    for (const auto& s : subs)
      if (s.galois_L) return s.galois_L;
    return std::nullopt;
  }
};

inline GroupExpr su_b(const HodgeProfile& p) { return make_group(Family::su_b, p.endo.deg_F, p.m() * p.endo.q); }

inline std::optional<ClassificationOutcome> type_iv_general(const HodgeProfile& p, const SubfieldView& v) {
  const auto& e = p.endo;
  if (e.q != 1) return std::nullopt;
  const int m = p.m();
  if (e.deg_L == 2 && e.cm_traces && v.traces_all_coprime())
    return only_lef(p, "imaginary-quadratic-coprime");
  auto su = [&](std::string rule, std::string cond) {
    return ClassificationOutcome{Status::determined, {{su_b(p), std::move(cond), Occurs::proven}}, std::move(rule), {}};
  };
  if (v.balanced_of_degree(e.deg_L) && numth::is_prime(static_cast<std::uint64_t>(p.n / e.deg_L)))
    return su("cm-field-balanced-prime", "V balanced over E = L and n/[L:Q] prime");
  if (e.deg_L % 4 == 0 && v.balanced_of_degree(e.deg_L / 2) && v.traces_all_coprime())
    return su("cm-field-balanced-index-two-coprime", "V balanced over E with [L:E] = 2 and coprime traces");
  if (m == 2) {
    for (const auto& s : v.subs)
      if (s.balanced) return su("cm-field-balanced-m-two", "V balanced over a CM subfield E and [L:Q] = n");
    if (v.balanced_of_degree(e.deg_L)) return su("cm-field-balanced-m-two", "V balanced over L and [L:Q] = n");
  }
  if (m == 1 && v.any_balanced())
    return upper_bound(p, "V balanced over a CM subfield E with [L:Q] = 2n: Hg(V) is contained in SU_{L/E}");
  return std::nullopt;
}

// Alternatives to the Lefschetz group that a balanced CM subfield would
// force; used when subfield data is missing.
inline std::vector<Candidate> type_iv_alternatives(const HodgeProfile& p, bool twice_prime) {
  const auto& e = p.endo;
  std::vector<Candidate> out;
  if (e.q != 1) return out;
  const int m = p.m();
  if (twice_prime) {
    const int pr = p.n / 2;
    if (e.deg_L == 4 * pr)
      out.push_back({torus_su_le(1, e.deg_F, 1),
                     "L contains an imaginary quadratic E with V balanced over E and L/Q Galois", Occurs::possible});
    else
      out.push_back({su_b(p), "L contains an imaginary quadratic E with V balanced over E", Occurs::possible});
    return out;
  }
  const bool prime_quot = numth::is_prime(static_cast<std::uint64_t>(p.n / e.deg_L));
  if (prime_quot || m == 2 || (e.deg_L % 4 == 0))
    out.push_back({su_b(p), "V balanced over a CM subfield E of L", Occurs::possible});
  return out;
}

inline ClassificationOutcome missing_subfields(const HodgeProfile& p, bool twice_prime) {
  ClassificationOutcome o{Status::conditional, {lef(p, "no balanced CM subfield forces a smaller group", Occurs::possible)},
                          "type-iv-missing-subfield-data", {}};
  for (auto& c : type_iv_alternatives(p, twice_prime)) {
    if (!meets_rank_bound(p, c.group)) {
      o.notes.push_back("alternative dropped by the rank lower bound: " + rank_bound_text(p, c.group));
      continue;
    }
    o.candidates.push_back(std::move(c));
  }
  if (o.candidates.size() > 1) return o;
  auto u = upper_bound(p, "");
  u.notes = std::move(o.notes);
  return u;
}

inline ClassificationOutcome type_iv_fallback(const HodgeProfile& p, const SubfieldView& v, bool twice_prime) {
  if (auto o = type_iv_general(p, v)) return *o;
  if (v.subs.empty() && p.endo.q == 1) return missing_subfields(p, twice_prime);
  return upper_bound(p, "no classification theorem matches this profile");
}

inline ClassificationOutcome dimension_four(const HodgeProfile& p, const SubfieldView& v) {
  const auto& e = p.endo;
  const bool odd = p.parity() == Parity::odd;
  const std::string rule = "dimension-four-table";
  if (e.type == AlbertType::I && e.deg_L == 1) {
    ClassificationOutcome o{Status::determined, {lef(p)}, rule, {}};
    if (odd) {
      if (!exclude_sl2_product({{{ClassicalKind::SO, 4}}}))
        o.candidates.push_back({make_group(Family::sl2_x_so4, 1, 8), "", Occurs::proven});
    } else {
      o.candidates.push_back({make_group(Family::so7, 1, 7), "", Occurs::proven});
      if (exclude_sl2_product({{{ClassicalKind::Sp, 4}}})) o.notes.push_back(strike_note("SL(2)xSp(4)"));
    }
    return o;
  }
  if (e.type != AlbertType::IV) return {Status::determined, {lef(p)}, rule, {}};
  if (e.deg_L == 2) {
    std::optional<bool> balanced;
    if (e.cm_traces) balanced = (*e.cm_traces)[0].first == 2;
    for (const auto& s : v.subs)
      if (s.deg_E == 2) balanced = s.balanced;
    const GroupExpr su = su_b(p);
    if (balanced && *balanced) return {Status::determined, {{su, "", Occurs::proven}}, rule, {}};
    if (balanced) return {Status::determined, {lef(p)}, rule, {}};
    return {Status::conditional,
            {lef(p, "{n_sigma, n_sigmabar} = {1,3}"), {su, "{n_sigma, n_sigmabar} = {2,2}", Occurs::proven}},
            rule,
            {}};
  }
  if (e.deg_L == 4) {
    ClassificationOutcome o{Status::determined, {lef(p)}, rule, {}};
    if (v.balanced(2))
      o.notes.push_back("a balanced imaginary quadratic subfield is incompatible with every realizable trace pattern");
    return o;
  }
  // deg_L == 8 with q == 1; the q == 2 shape is never realizable.
  const GroupExpr su_le = torus_su_le(1, e.deg_F, 1);
  if (v.balanced(2)) return {Status::determined, {{su_le, "", Occurs::proven}}, rule, {}};
  if (!v.subs.empty()) return {Status::determined, {lef(p)}, rule, {}};
  return {Status::conditional,
          {lef(p, "no imaginary quadratic E with V balanced over E"),
           {su_le, "L contains an imaginary quadratic E with V balanced over E", Occurs::proven}},
          rule,
          {}};
}

inline ClassificationOutcome twice_prime(const HodgeProfile& p, const SubfieldView& v) {
  const auto& e = p.endo;
  const std::string rule = "twice-prime-dimension";
  if (e.type != AlbertType::IV) return only_lef(p, rule);
  const int pr = p.n / 2;
  if (e.q == 1 && v.balanced(2)) {
    if (e.deg_L != 4 * pr) {
      ClassificationOutcome o{Status::determined, {{su_b(p), "", Occurs::proven}}, rule, {}};
      return o;
    }
    const auto g = v.galois();
    const GroupExpr su_le = torus_su_le(1, e.deg_F, 1);
    if (g && *g) return {Status::determined, {{su_le, "", Occurs::proven}}, rule, {}};
    if (!g)
      return {Status::conditional,
              {{su_le, "L/Q is Galois", Occurs::possible},
               lef(p, "upper bound when L/Q is not Galois", Occurs::possible)},
              rule,
              {"the theorem needs L/Q Galois when [L:Q] = 4p"}};
  }
  return type_iv_fallback(p, v, true);
}

inline void add_rank_bound_notes(const HodgeProfile& p, ClassificationOutcome& o) {
  if (!commutative_L(p)) return;
  for (const auto& c : o.candidates)
    if (!meets_rank_bound(p, c.group))
      o.notes.push_back("rank bound conflict: " + rank_bound_text(p, c.group) +
                        "; no Hodge structure has this endomorphism and subfield data");
}

}  // namespace detail

// Possible Hodge groups of a realizable profile. Throws PreconditionError when
// the profile is invalid, not realizable, or the subfield data is inconsistent.
inline ClassificationOutcome classify(const HodgeProfile& p, const std::vector<SubfieldDescriptor>& subfields = {}) {
  require_valid(p);
  const Realizability r = realizable(p);
  if (r.realizable && !*r.realizable) throw PreconditionError("profile is not realizable: " + r.reason);
  const auto& e = p.endo;
  const bool type_iv = e.type == AlbertType::IV;
  if (type_iv)
    for (const auto& s : subfields) su_constraint(p, s);

  const detail::SubfieldView view{p, subfields};
  ClassificationOutcome o;
  const bool n_prime = numth::is_prime(static_cast<std::uint64_t>(p.n));
  if (p.n == 1) {
    o = detail::only_lef(p, "dimension-one");
  } else if (n_prime) {
    o = detail::only_lef(p, "prime-dimension");
  } else if (p.n == 4) {
    o = detail::dimension_four(p, view);
  } else if (p.n % 2 == 0 && detail::is_odd_prime(p.n / 2)) {
    o = detail::twice_prime(p, view);
  } else {
    std::optional<ClassificationOutcome> g;
    switch (e.type) {
      case AlbertType::I: g = detail::type_i_general(p); break;
      case AlbertType::II:
      case AlbertType::III: g = detail::quaternion_general(p); break;
      case AlbertType::IV: g = detail::type_iv_fallback(p, view, false); break;
    }
    o = g ? *g : detail::upper_bound(p, "no classification theorem matches this profile");
  }
  if (!type_iv && !subfields.empty()) o.notes.push_back("subfield data ignored for types I to III");
  if (!r.realizable && o.status == Status::determined) {
    o.status = Status::conditional;
    o.notes.push_back("realizability pending omitted data: " + r.reason);
  }
  detail::add_rank_bound_notes(p, o);
  return o;
}

struct Table3Row {
  std::string type;
  int deg_L;
  std::string odd;   // "-" when no group in this parity
  std::string even;
  bool lefschetz;
  bool operator==(const Table3Row&) const = default;
};

namespace detail {

struct Shape {
  AlbertType type;
  int deg_L, deg_F, q;
};

inline std::vector<std::vector<TracePair>> trace_completions(int g, int sum) {
  std::vector<std::vector<TracePair>> out{{}};
  for (int i = 0; i < g; ++i) {
    std::vector<std::vector<TracePair>> next;
    for (const auto& t : out)
      for (int a = 0; a <= sum; ++a) {
        auto u = t;
        u.push_back({a, sum - a});
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

// Union of determined candidate labels over every admissible completion of a shape.
inline std::vector<std::string> shape_groups(const Shape& s, Parity parity, int n) {
  std::vector<std::string> labels;
  const std::vector<std::vector<SubfieldDescriptor>> subfield_cases{
      {}, {{2, true, std::nullopt}}, {{2, false, std::nullopt}}};
  std::vector<std::optional<std::vector<TracePair>>> traces{std::nullopt};
  if (s.type == AlbertType::IV) {
    const int sum = 2 * n / s.deg_L * s.q;
    for (auto& t : trace_completions(s.deg_F, sum)) traces.push_back(t);
  }
  for (auto disc : {std::optional<bool>{false}, std::optional<bool>{true}})
    for (const auto& tr : traces)
      for (const auto& subs : subfield_cases) {
        if (s.type != AlbertType::IV && !subs.empty()) continue;
        HodgeProfile p{parity == Parity::odd ? 1 : 2, n, {s.type, s.deg_L, s.deg_F, s.q, tr, disc}};
        auto r = realizable(p);
        if (!r.realizable || !*r.realizable) continue;
        ClassificationOutcome o;
        try {
          o = classify(p, subs);
        } catch (const PreconditionError&) {
          continue;
        }
        if (o.status != Status::determined) continue;
        for (const auto& c : o.candidates) {
          auto l = label(c.group);
          if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
        }
      }
  return labels;
}

}  // namespace detail

// Regenerates the dimension-four table from the classifier.
inline std::vector<Table3Row> table3_rows() {
  using detail::Shape;
  const std::vector<Shape> shapes{
      {AlbertType::I, 1, 1, 1},   {AlbertType::I, 2, 2, 1},   {AlbertType::I, 4, 4, 1},
      {AlbertType::II, 4, 1, 2},  {AlbertType::II, 8, 2, 2},  {AlbertType::III, 4, 1, 2},
      {AlbertType::III, 8, 2, 2}, {AlbertType::IV, 2, 1, 1},  {AlbertType::IV, 4, 2, 1},
      {AlbertType::IV, 8, 4, 1},  {AlbertType::IV, 8, 1, 2},
  };
  const int n = 4;
  std::vector<Table3Row> rows;
  for (const auto& s : shapes) {
    auto odd = detail::shape_groups(s, Parity::odd, n);
    auto even = detail::shape_groups(s, Parity::even, n);
    if (odd.empty() && even.empty()) continue;
    const std::string type(to_string(s.type));
    std::string lef_odd = "-", lef_even = "-";
    for (auto parity : {Parity::odd, Parity::even}) {
      auto& groups = parity == Parity::odd ? odd : even;
      if (groups.empty()) continue;
      HodgeProfile p{parity == Parity::odd ? 1 : 2, n, {s.type, s.deg_L, s.deg_F, s.q, std::nullopt, std::nullopt}};
      auto l = label(lefschetz_group(p));
      (parity == Parity::odd ? lef_odd : lef_even) = l;
      groups.erase(std::remove(groups.begin(), groups.end(), l), groups.end());
    }
    // Existing rows for this (type, deg_L) can be merged into when the shape repeats a degree.
    auto merge = [&](Table3Row row) {
      for (auto& r : rows)
        if (r.type == row.type && r.deg_L == row.deg_L && r.lefschetz == row.lefschetz &&
            (r.lefschetz || (r.odd == row.odd && r.even == row.even)))
          return;
      rows.push_back(std::move(row));
    };
    merge({type, s.deg_L, lef_odd, lef_even, true});
    for (const auto& g : odd) {
      const bool both = std::find(even.begin(), even.end(), g) != even.end();
      merge({type, s.deg_L, g, both ? g : "-", false});
    }
    for (const auto& g : even)
      if (std::find(odd.begin(), odd.end(), g) == odd.end()) merge({type, s.deg_L, "-", g, false});
  }
  return rows;
}

}  // namespace hodge
