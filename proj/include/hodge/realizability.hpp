#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hodge/core.hpp"

namespace hodge {

struct ExceptionalCase {
  Parity parity;
  int index;
  std::string_view description;
  bool operator==(const ExceptionalCase&) const = default;
};

inline constexpr std::array<ExceptionalCase, 5> odd_exceptional_cases{{
    {Parity::odd, 1, "Type III and m = 1"},
    {Parity::odd, 2, "Type III, m = 2, and the discriminant of (B,-) is 1 in F*/(F*)^2"},
    {Parity::odd, 3, "Type IV and sum of n_sigma * n_sigmabar is 0, unless m = q = 1"},
    {Parity::odd, 4, "Type IV, m = 2, q = 1, and n_sigma = n_sigmabar = 1 for all i"},
    {Parity::odd, 5, "Type IV, m = 1, q = 2, and n_sigma = n_sigmabar = 1 for all i"},
}};

inline constexpr std::array<ExceptionalCase, 7> even_exceptional_cases{{
    {Parity::even, 1, "Type II and m = 1"},
    {Parity::even, 2, "Type II, m = 2, and the discriminant of (B,-) is 1 in F*/(F*)^2"},
    {Parity::even, 3, "Type IV and sum of n_sigma * n_sigmabar is 0, unless m = q = 1"},
    {Parity::even, 4, "Type IV, m = 2, q = 1, and n_sigma = n_sigmabar = 1 for all i"},
    {Parity::even, 5, "Type IV, m = 1, q = 2, and n_sigma = n_sigmabar = 1 for all i"},
    {Parity::even, 6, "Type I and m = 2"},
    {Parity::even, 7, "Type I, m = 4, and (V, <,>) has discriminant 1"},
}};

// Result of the exceptional-case test. `conditional` means the case matches
// for some completion of the omitted disc_one / cm_traces data but not all.
struct ExceptionalMatch {
  ExceptionalCase kase;
  bool conditional = false;
};

namespace detail {

enum class Tri { no, yes, unknown };

inline Tri traces_all(const HodgeProfile& p, auto pred) {
  if (!p.endo.cm_traces) return Tri::unknown;
  for (auto t : *p.endo.cm_traces)
    if (!pred(t)) return Tri::no;
  return Tri::yes;
}

inline Tri case_applies(const HodgeProfile& p, const ExceptionalCase& c) {
  const auto& e = p.endo;
  const int m = p.m();
  auto flag = [&](bool shape) {
    if (!shape) return Tri::no;
    if (!e.disc_one) return Tri::unknown;
    return *e.disc_one ? Tri::yes : Tri::no;
  };
  auto iv_zero_product = [&] {
    if (e.type != AlbertType::IV || (m == 1 && e.q == 1)) return Tri::no;
    return traces_all(p, [](TracePair t) { return t.first * t.second == 0; });
  };
  auto iv_all_ones = [&](int mm, int qq) {
    if (e.type != AlbertType::IV || m != mm || e.q != qq) return Tri::no;
    return traces_all(p, [](TracePair t) { return t.first == 1 && t.second == 1; });
  };
  const bool odd = c.parity == Parity::odd;
  switch (c.index) {
    case 1: return (e.type == (odd ? AlbertType::III : AlbertType::II) && m == 1) ? Tri::yes : Tri::no;
    case 2: return flag(e.type == (odd ? AlbertType::III : AlbertType::II) && m == 2);
    case 3: return iv_zero_product();
    case 4: return iv_all_ones(2, 1);
    case 5: return iv_all_ones(1, 2);
    case 6: return (e.type == AlbertType::I && m == 2) ? Tri::yes : Tri::no;
    case 7: return flag(e.type == AlbertType::I && m == 4);
  }
  return Tri::no;
}

template <class F>
void for_each_case(Parity parity, F f) {
  if (parity == Parity::odd) {
    for (const auto& c : odd_exceptional_cases) f(c);
  } else {
    for (const auto& c : even_exceptional_cases) f(c);
  }
}

}  // namespace detail

// Tests the exceptional cases for the profile's parity in catalog order. A
// definite match wins over a conditional one.
inline std::optional<ExceptionalMatch> is_exceptional(const HodgeProfile& p) {
  require_valid(p);
  std::optional<ExceptionalMatch> definite, conditional;
  detail::for_each_case(p.parity(), [&](const ExceptionalCase& c) {
    auto r = detail::case_applies(p, c);
    if (r == detail::Tri::yes && !definite) definite = ExceptionalMatch{c, false};
    if (r == detail::Tri::unknown && !conditional) conditional = ExceptionalMatch{c, true};
  });
  if (definite) return definite;
  return conditional;
}

// True when every way of filling in the omitted cm_traces makes the profile
// exceptional. Only the type IV cases consult traces; they depend on whether
// each pair has a zero entry and whether each pair is (1,1).
inline bool every_trace_completion_exceptional(const HodgeProfile& p) {
  const auto& e = p.endo;
  if (e.type != AlbertType::IV || e.cm_traces) return false;
  const int m = p.m(), mq = p.m() * e.q;
  if (m == 1 && e.q == 1) return false;
  if (mq >= 3) return false;  // (1, mq-1) is neither a zero pair nor (1,1)
  // mq == 2: every pair is (0,2), (2,0) or (1,1). With at least two pairs a
  // mixed choice escapes both cases; a single pair cannot.
  return e.deg_F == 1;
}

struct Realizability {
  std::optional<bool> realizable;  // nullopt: pending omitted data
  std::optional<ExceptionalMatch> match;
  std::vector<Violation> violations;
  std::string reason;
};

inline Realizability realizable(const HodgeProfile& p) {
  Realizability r;
  r.violations = validate_profile(p);
  if (!r.violations.empty()) {
    r.realizable = false;
    r.reason = "invalid profile: " + r.violations.front().message;
    return r;
  }
  r.match = is_exceptional(p);
  if (!r.match) {
    r.realizable = true;
    r.reason = "no exceptional case applies";
  } else if (!r.match->conditional) {
    r.realizable = false;
    r.reason = "exceptional case (" + std::string(to_string(p.parity())) + " " +
               std::to_string(r.match->kase.index) + "): " + std::string(r.match->kase.description);
  } else if (every_trace_completion_exceptional(p)) {
    r.realizable = false;
    r.reason = "every admissible choice of cm_traces is exceptional";
  } else {
    r.reason = "depends on omitted data; first candidate case " +
               std::to_string(r.match->kase.index) + ": " + std::string(r.match->kase.description);
  }
  return r;
}

}  // namespace hodge
