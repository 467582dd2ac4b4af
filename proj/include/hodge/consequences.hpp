#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/classifier.hpp"
#include "hodge/core.hpp"
#include "hodge/numth.hpp"
#include "hodge/realizability.hpp"

namespace hodge {

// Simple abelian variety of dimension 2p, seen through H^1 (weight 1, n = 2p).
// `subfields` plays the role of W(A): CM fields with a balanced action.
struct AbelianProfile {
  int dim = 6;
  EndomorphismDescriptor endo;
  std::vector<SubfieldDescriptor> subfields;
  bool operator==(const AbelianProfile&) const = default;
};

enum class Proof { proven, open };

constexpr std::string_view to_string(Proof p) { return p == Proof::proven ? "proven" : "open"; }

struct MurtyVerdict {
  std::optional<bool> equal;  // nullopt: outside the known hypotheses
  std::string rationale;
};

struct HodgeStatus {
  std::optional<bool> divisor_weil_generated;
  Proof hc_all_powers = Proof::open;
  bool ghc_reduction = false;  // HC for all powers implies GHC for all powers
  Proof ghc_all_powers = Proof::open;
  std::string rationale;
};

inline HodgeProfile as_hodge_profile(const AbelianProfile& a) { return {1, a.dim, a.endo}; }

inline void require_abelian(const AbelianProfile& a) {
  if (a.dim < 6 || a.dim % 2 || !numth::is_prime(static_cast<std::uint64_t>(a.dim / 2)))
    throw PreconditionError("dimension must be 2p with p an odd prime");
  const HodgeProfile p = as_hodge_profile(a);
  require_valid(p);
  auto r = realizable(p);
  if (r.realizable && !*r.realizable) throw PreconditionError("not realizable at odd weight: " + r.reason);
  if (a.endo.type == AlbertType::IV)
    for (const auto& s : a.subfields) su_constraint(p, s);
}

namespace detail {

inline const SubfieldDescriptor* weil_quadratic(const AbelianProfile& a) {
  for (const auto& s : a.subfields)
    if (s.deg_E == 2 && s.balanced) return &s;
  return nullptr;
}

inline std::optional<bool> galois_flag(const AbelianProfile& a) {
  if (auto s = weil_quadratic(a); s && s->galois_L) return s->galois_L;
  for (const auto& s : a.subfields)
    if (s.galois_L) return s.galois_L;
  return std::nullopt;
}

}  // namespace detail

inline MurtyVerdict murty_equal(const AbelianProfile& a) {
  require_abelian(a);
  const int four_p = 2 * a.dim;
  switch (a.endo.type) {
    case AlbertType::I:
    case AlbertType::II:
    case AlbertType::III:
      return {true, "Hg(A) = Lef(A) for types I to III in dimension 2p, and Lef(A) = M(A) for these types"};
    case AlbertType::IV:
      break;
  }
  if (a.endo.q == 1 && detail::weil_quadratic(a)) {
    if (a.endo.deg_L != four_p)
      return {true, "Hg(A) = R_{F/Q}SU(B,-) = Lef(A) cut by R_{J/Q}SU(C,-) for the balanced imaginary quadratic E"};
    auto g = detail::galois_flag(a);
    if (g && *g) return {true, "Hg(A) = SU_{L/E} = Lef(A) cut by R_{J/Q}SU(C,-) since L/Q is Galois"};
    return {std::nullopt, "[L:Q] = 4p needs L/Q Galois to identify Hg(A); Galois flag " +
                              std::string(g ? "false" : "unknown")};
  }
  return {std::nullopt, "type IV without a balanced imaginary quadratic subfield in W(A)"};
}

inline HodgeStatus hodge_status(const AbelianProfile& a) {
  const MurtyVerdict mv = murty_equal(a);
  HodgeStatus s;
  s.divisor_weil_generated = mv.equal;
  switch (a.endo.type) {
    case AlbertType::I:
    case AlbertType::II:
      s.hc_all_powers = Proof::proven;
      s.ghc_reduction = true;
      s.ghc_all_powers = Proof::proven;
      s.rationale = "Weil classes of types I and II are divisor classes, so HC holds for all powers and GHC follows";
      return s;
    case AlbertType::III:
      s.ghc_reduction = true;
      s.rationale = "Hodge ring generated by divisors and Weil classes; exceptional Weil classes may occur; "
                    "2 dim A / [L:Q] is odd so HC implies GHC";
      return s;
    case AlbertType::IV:
      break;
  }
  const bool has_e = a.endo.q == 1 && detail::weil_quadratic(a);
  s.ghc_reduction = has_e && a.endo.deg_L != 2 * a.dim;
  if (!has_e) {
    s.rationale = "no balanced imaginary quadratic subfield: no corollary applies";
  } else if (s.divisor_weil_generated) {
    s.rationale = s.ghc_reduction ? "Hodge ring generated by divisors and Weil classes; HC implies GHC"
                                  : "Hodge ring generated by divisors and Weil classes; the HC to GHC reduction "
                                    "excludes [L:Q] = 4p";
  } else {
    s.rationale = "[L:Q] = 4p without a Galois L/Q: Murty group equality unknown, HC to GHC reduction excluded";
  }
  return s;
}

}  // namespace hodge
