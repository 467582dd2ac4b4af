#pragma once

#include <cstdint>

#include "hodge/core.hpp"

namespace hodge {

inline GroupExpr lefschetz_group(const HodgeProfile& p) {
  require_valid(p);
  const auto& e = p.endo;
  const bool odd = p.parity() == Parity::odd;
  const int g = e.deg_F;
  const int m = p.m();
  switch (e.type) {
    case AlbertType::I:
      return make_group(odd ? Family::sp : Family::so, g, 2 * p.n / g);
    case AlbertType::II:
      return make_group(odd ? Family::sp_b : Family::o_plus_b, g, 2 * m);
    case AlbertType::III:
      return make_group(odd ? Family::o_plus_b : Family::sp_b, g, 2 * m);
    case AlbertType::IV:
      // U(B) of a one-dimensional hermitian space over F0 is the torus U_L.
      if (m * e.q == 1) return make_group(Family::torus_u_l, 1, g);
      return make_group(Family::u_b, g, m * e.q);
  }
  throw PreconditionError("unknown type");
}

inline std::int64_t group_dim(const GroupExpr& x) {
  check_well_formed(x);
  const std::int64_t k = x.size;
  std::int64_t d = 0;
  switch (x.family) {
    case Family::sp:
    case Family::sp_b: d = (k / 2) * (k + 1); break;
    case Family::so:
    case Family::o_plus_b: d = (k / 2) * (k - 1); break;
    case Family::u_b: d = k * k; break;
    case Family::su_b:
    case Family::su_2k: d = k * k - 1; break;
    case Family::torus_u_l: d = k; break;
    case Family::torus_su_le: d = k - x.codim; break;
    case Family::sl2_x_so4: d = 3 + 6; break;
    case Family::so7: d = 21; break;
  }
  return x.base_degree * d;
}

inline std::int64_t group_rank(const GroupExpr& x) {
  check_well_formed(x);
  const std::int64_t k = x.size;
  std::int64_t r = 0;
  switch (x.family) {
    case Family::sp:
    case Family::sp_b:
    case Family::so:
    case Family::o_plus_b: r = k / 2; break;
    case Family::u_b: r = k; break;
    case Family::su_b:
    case Family::su_2k: r = k - 1; break;
    case Family::torus_u_l: r = k; break;
    case Family::torus_su_le: r = k - x.codim; break;
    case Family::sl2_x_so4: r = 1 + 2; break;
    case Family::so7: r = 3; break;
  }
  return x.base_degree * r;
}

}  // namespace hodge
