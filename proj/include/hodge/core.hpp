#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hodge {

enum class AlbertType { I, II, III, IV };
enum class Parity { odd, even };

constexpr std::string_view to_string(AlbertType t) {
  switch (t) {
    case AlbertType::I: return "I";
    case AlbertType::II: return "II";
    case AlbertType::III: return "III";
    case AlbertType::IV: return "IV";
  }
  return "?";
}

constexpr std::string_view to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

inline std::optional<AlbertType> parse_albert_type(std::string_view s) {
  if (s == "I") return AlbertType::I;
  if (s == "II") return AlbertType::II;
  if (s == "III") return AlbertType::III;
  if (s == "IV") return AlbertType::IV;
  return std::nullopt;
}

// A precondition of an operation was not met by its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using TracePair = std::pair<int, int>;

struct EndomorphismDescriptor {
  AlbertType type = AlbertType::I;
  int deg_L = 1;
  int deg_F = 1;
  int q = 1;
  std::optional<std::vector<TracePair>> cm_traces;
  std::optional<bool> disc_one;

  bool operator==(const EndomorphismDescriptor&) const = default;
};

struct HodgeProfile {
  int weight = 1;
  int n = 1;
  EndomorphismDescriptor endo;

  Parity parity() const { return weight % 2 ? Parity::odd : Parity::even; }
  // Matrix size of the centralizer B = M_m(L^op); only meaningful when deg_L | 2n.
  int m() const { return endo.deg_L > 0 ? 2 * n / endo.deg_L : 0; }
  bool operator==(const HodgeProfile&) const = default;
};

enum class ViolationCode {
  weight_nonpositive,
  n_nonpositive,
  degree_nonpositive,
  deg_L_not_dividing_2n,
  deg_F_not_dividing_n,
  type_I_shape,
  quaternion_shape,
  type_IV_shape,
  cm_traces_not_type_IV,
  cm_traces_length,
  cm_traces_negative,
  cm_traces_sum,
};

constexpr std::string_view to_string(ViolationCode c) {
  switch (c) {
    case ViolationCode::weight_nonpositive: return "weight_nonpositive";
    case ViolationCode::n_nonpositive: return "n_nonpositive";
    case ViolationCode::degree_nonpositive: return "degree_nonpositive";
    case ViolationCode::deg_L_not_dividing_2n: return "deg_L_not_dividing_2n";
    case ViolationCode::deg_F_not_dividing_n: return "deg_F_not_dividing_n";
    case ViolationCode::type_I_shape: return "type_I_shape";
    case ViolationCode::quaternion_shape: return "quaternion_shape";
    case ViolationCode::type_IV_shape: return "type_IV_shape";
    case ViolationCode::cm_traces_not_type_IV: return "cm_traces_not_type_IV";
    case ViolationCode::cm_traces_length: return "cm_traces_length";
    case ViolationCode::cm_traces_negative: return "cm_traces_negative";
    case ViolationCode::cm_traces_sum: return "cm_traces_sum";
  }
  return "?";
}

struct Violation {
  ViolationCode code;
  std::string message;
  bool operator==(const Violation&) const = default;
};

inline std::vector<Violation> validate_profile(const HodgeProfile& p) {
  std::vector<Violation> out;
  auto add = [&](ViolationCode c, std::string msg) { out.push_back({c, std::move(msg)}); };
  const auto& e = p.endo;

  if (p.weight < 1) add(ViolationCode::weight_nonpositive, "weight must be at least 1");
  if (p.n < 1) add(ViolationCode::n_nonpositive, "n must be at least 1");
  if (e.deg_L < 1 || e.deg_F < 1 || e.q < 1) {
    add(ViolationCode::degree_nonpositive, "deg_L, deg_F and q must be positive");
    return out;
  }
  if (p.n >= 1) {
    if ((2 * p.n) % e.deg_L != 0)
      add(ViolationCode::deg_L_not_dividing_2n, "deg_L does not divide 2n");
    if (p.n % e.deg_F != 0) add(ViolationCode::deg_F_not_dividing_n, "deg_F does not divide n");
  }
  switch (e.type) {
    case AlbertType::I:
      if (e.q != 1 || e.deg_L != e.deg_F)
        add(ViolationCode::type_I_shape, "type I requires q = 1 and deg_L = deg_F");
      break;
    case AlbertType::II:
    case AlbertType::III:
      if (e.q != 2 || e.deg_L != 4 * e.deg_F)
        add(ViolationCode::quaternion_shape, "types II and III require q = 2 and deg_L = 4 deg_F");
      break;
    case AlbertType::IV:
      if (e.deg_L != 2 * e.deg_F * e.q * e.q)
        add(ViolationCode::type_IV_shape, "type IV requires deg_L = 2 deg_F q^2");
      break;
  }
  if (e.cm_traces) {
    if (e.type != AlbertType::IV) {
      add(ViolationCode::cm_traces_not_type_IV, "cm_traces are only meaningful for type IV");
    } else {
      const auto& t = *e.cm_traces;
      if (static_cast<int>(t.size()) != e.deg_F)
        add(ViolationCode::cm_traces_length, "cm_traces must have deg_F pairs");
      bool negative = false, bad_sum = false;
      const bool m_defined = p.n >= 1 && (2 * p.n) % e.deg_L == 0;
      for (auto [a, b] : t) {
        if (a < 0 || b < 0) negative = true;
        if (m_defined && a + b != p.m() * e.q) bad_sum = true;
      }
      if (negative) add(ViolationCode::cm_traces_negative, "cm_traces entries must be nonnegative");
      if (bad_sum) add(ViolationCode::cm_traces_sum, "each cm_traces pair must sum to m q");
    }
  }
  return out;
}

inline void require_valid(const HodgeProfile& p) {
  auto v = validate_profile(p);
  if (!v.empty()) throw PreconditionError("invalid profile: " + v.front().message);
}

// Group families at the resolution of their complex isomorphism class.
enum class Family {
  sp,           // Sp(size), split form on _F V
  so,           // SO(size), split form on _F V
  o_plus_b,     // O+(B,-), form of SO(size)
  sp_b,         // Sp(B,-), form of Sp(size)
  u_b,          // U(B,-), form of GL(size)
  su_b,         // SU(B,-), form of SL(size)
  su_2k,        // SU(2^k) acting through the middle exterior power; size = 2^k
  torus_u_l,    // U_L, rank = size
  torus_su_le,  // SU_{L/E} inside U_L of rank size; codim = [J:Q]
  sl2_x_so4,    // SL(2) x SO(4) acting by the tensor product of standards
  so7,          // SO(7) acting through the spin representation
};

enum class Rep { standard, spin, exterior_power, product_of_standards, none };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::sp: return "sp";
    case Family::so: return "so";
    case Family::o_plus_b: return "o_plus_b";
    case Family::sp_b: return "sp_b";
    case Family::u_b: return "u_b";
    case Family::su_b: return "su_b";
    case Family::su_2k: return "su_2k";
    case Family::torus_u_l: return "torus_u_l";
    case Family::torus_su_le: return "torus_su_le";
    case Family::sl2_x_so4: return "sl2_x_so4";
    case Family::so7: return "so7";
  }
  return "?";
}

constexpr std::string_view to_string(Rep r) {
  switch (r) {
    case Rep::standard: return "standard";
    case Rep::spin: return "spin";
    case Rep::exterior_power: return "exterior_power";
    case Rep::product_of_standards: return "product_of_standards";
    case Rep::none: return "none";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (auto f : {Family::sp, Family::so, Family::o_plus_b, Family::sp_b, Family::u_b, Family::su_b,
                 Family::su_2k, Family::torus_u_l, Family::torus_su_le, Family::sl2_x_so4, Family::so7})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

inline std::optional<Rep> parse_rep(std::string_view s) {
  for (auto r : {Rep::standard, Rep::spin, Rep::exterior_power, Rep::product_of_standards, Rep::none})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

struct GroupExpr {
  Family family = Family::sp;
  int base_degree = 1;
  int size = 2;          // matrix size, or torus rank for the torus families
  Rep rep = Rep::standard;
  int exterior = 0;      // j for exterior_power(j)
  int codim = 0;         // torus_su_le only

  bool operator==(const GroupExpr&) const = default;
  auto operator<=>(const GroupExpr&) const = default;
};

inline GroupExpr make_group(Family f, int base_degree, int size) {
  GroupExpr g;
  g.family = f;
  g.base_degree = base_degree;
  g.size = size;
  switch (f) {
    case Family::su_2k:
      g.rep = Rep::exterior_power;
      g.exterior = size / 2;
      break;
    case Family::torus_u_l:
      g.rep = Rep::none;
      break;
    case Family::torus_su_le:
      g.rep = Rep::none;
      g.codim = 1;
      break;
    case Family::sl2_x_so4:
      g.rep = Rep::product_of_standards;
      g.size = 8;
      break;
    case Family::so7:
      g.rep = Rep::spin;
      g.size = 7;
      break;
    default:
      break;
  }
  return g;
}

inline GroupExpr torus_su_le(int base_degree, int rank_u_l, int codim) {
  GroupExpr g = make_group(Family::torus_su_le, base_degree, rank_u_l);
  g.codim = codim;
  return g;
}

// Throws PreconditionError when the parameters do not describe a group of the family.
inline void check_well_formed(const GroupExpr& g) {
  auto fail = [](const char* why) { throw PreconditionError(std::string("malformed group: ") + why); };
  if (g.base_degree < 1) fail("base_degree must be positive");
  switch (g.family) {
    case Family::sp:
    case Family::sp_b:
    case Family::so:
    case Family::o_plus_b:
      if (g.size < 2 || g.size % 2) fail("size must be even and positive");
      if (g.rep != Rep::standard) fail("classical families act by the standard representation");
      break;
    case Family::u_b:
    case Family::su_b:
      if (g.size < 1) fail("size must be positive");
      if (g.rep != Rep::standard) fail("unitary families act by the standard representation");
      break;
    case Family::su_2k:
      if (g.size < 2 || (g.size & (g.size - 1))) fail("size must be a power of two");
      if (g.rep != Rep::exterior_power || g.exterior != g.size / 2)
        fail("SU(2^k) acts through the middle exterior power");
      break;
    case Family::torus_u_l:
      if (g.size < 1 || g.rep != Rep::none) fail("torus rank must be positive");
      break;
    case Family::torus_su_le:
      if (g.codim < 1 || g.codim >= g.size || g.rep != Rep::none) fail("bad torus codimension");
      break;
    case Family::sl2_x_so4:
      if (g.size != 8 || g.rep != Rep::product_of_standards) fail("SL(2)xSO(4) is fixed");
      break;
    case Family::so7:
      if (g.size != 7 || g.rep != Rep::spin) fail("SO(7) acts by the spin representation");
      break;
  }
  if (g.family != Family::su_2k && g.exterior != 0) fail("exterior index only for SU(2^k)");
  if (g.family != Family::torus_su_le && g.codim != 0) fail("codim only for SU_{L/E}");
}

inline std::string label(const GroupExpr& g) {
  const std::string r = g.base_degree > 1 ? "R_{F/Q}" : "";
  const std::string k = std::to_string(g.size);
  switch (g.family) {
    case Family::sp: return g.base_degree > 1 ? r + "Sp(_FV)" : "Sp(" + k + ")";
    case Family::so: return g.base_degree > 1 ? r + "SO(_FV)" : "SO(" + k + ")";
    case Family::o_plus_b: return r + (g.size == 2 ? "O+(L,-)" : "O+(B,-)");
    case Family::sp_b: return r + (g.size == 2 ? "Sp(L,-)" : "Sp(B,-)");
    case Family::u_b: return r + "U(B,-)";
    case Family::su_b: return r + "SU(B,-)";
    case Family::su_2k: return r + "SU(" + k + ")";
    case Family::torus_u_l: return "U_L";
    case Family::torus_su_le: return "SU_{L/E}";
    case Family::sl2_x_so4: return "SL(2)xSO(4)";
    case Family::so7: return "SO(7)";
  }
  return "?";
}

}  // namespace hodge
