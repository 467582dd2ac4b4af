#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hodge/core.hpp"
#include "hodge/numth.hpp"

namespace hodge::cm {

using BigInt = boost::multiprecision::cpp_int;
using Perm = std::vector<int>;  // image of each point of Sigma

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// (a * b)(x) = a(b(x))
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

class ModelError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct GaloisModel {
  int degree = 0;  // |Sigma| = 2g
  std::vector<Perm> generators;
  Perm iota;

  int g() const { return degree / 2; }
};

// Closure of the generators, sorted. Guarded against runaway sizes.
inline std::vector<Perm> group_elements(const GaloisModel& m, size_t limit = 100000) {
  std::set<Perm> seen{identity_perm(m.degree)};
  std::vector<Perm> frontier{identity_perm(m.degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& s : m.generators) {
        Perm y = compose(s, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    if (seen.size() > limit) throw ModelError("group too large");
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline void validate_model(const GaloisModel& m) {
  if (m.degree < 2 || m.degree % 2) throw ModelError("Sigma must have even positive size");
  for (const auto& s : m.generators)
    if (static_cast<int>(s.size()) != m.degree || !is_permutation(s)) throw ModelError("bad generator");
  if (static_cast<int>(m.iota.size()) != m.degree || !is_permutation(m.iota)) throw ModelError("bad iota");
  for (int x = 0; x < m.degree; ++x) {
    if (m.iota[x] == x) throw ModelError("iota has a fixed point");
    if (m.iota[m.iota[x]] != x) throw ModelError("iota is not an involution");
  }
  for (const auto& s : m.generators)
    if (compose(s, m.iota) != compose(m.iota, s)) throw ModelError("iota is not central");
  auto elems = group_elements(m);
  if (!std::binary_search(elems.begin(), elems.end(), m.iota)) throw ModelError("iota is not in the group");
  std::vector<bool> reached(m.degree, false);
  for (const auto& e : elems) reached[e[0]] = true;
  if (std::count(reached.begin(), reached.end(), false)) throw ModelError("action is not transitive");
}

// Conjugate pairs {s, iota(s)} represented by their smaller element.
inline std::vector<int> pair_representatives(const GaloisModel& m) {
  std::vector<int> reps;
  for (int x = 0; x < m.degree; ++x)
    if (x < m.iota[x]) reps.push_back(x);
  return reps;
}

using CMType = std::vector<int>;  // sorted subset of Sigma

inline void validate_cm_type(const GaloisModel& m, const CMType& theta) {
  std::vector<int> hit(m.degree, 0);
  for (int x : theta) {
    if (x < 0 || x >= m.degree) throw ModelError("CM type point out of range");
    hit[x]++;
  }
  for (int x = 0; x < m.degree; ++x)
    if (hit[x] + hit[m.iota[x]] != 1) throw ModelError("not a CM type");
}

// Bit i of the mask picks iota(rep_i) instead of rep_i.
inline std::vector<CMType> enumerate_cm_types(const GaloisModel& m) {
  validate_model(m);
  auto reps = pair_representatives(m);
  const int g = static_cast<int>(reps.size());
  if (g > 24) throw ModelError("too many CM types to enumerate");
  std::vector<CMType> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
    CMType t;
    for (int i = 0; i < g; ++i) t.push_back((mask >> i) & 1 ? m.iota[reps[i]] : reps[i]);
    std::sort(t.begin(), t.end());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline CMType apply(const Perm& p, const CMType& t) {
  CMType r;
  for (int x : t) r.push_back(p[x]);
  std::sort(r.begin(), r.end());
  return r;
}

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline int integer_rank(std::vector<std::vector<BigInt>> a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  BigInt prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

struct KubotaRank {
  int raw = 0;
  int reduced = 0;
  bool operator==(const KubotaRank&) const = default;
};

inline KubotaRank kubota_rank_with(const GaloisModel& m, const std::vector<Perm>& elems, const CMType& theta) {
  validate_cm_type(m, theta);
  std::set<CMType> orbit;
  for (const auto& a : elems) orbit.insert(apply(a, theta));
  auto reps = pair_representatives(m);
  std::vector<std::vector<BigInt>> raw, red;
  for (const auto& t : orbit) {
    std::vector<BigInt> v(m.degree, 0), w;
    for (int x : t) v[x] = 1;
    // 1_T - 1_{iota T}, read on one point per conjugate pair.
    for (int s : reps) w.push_back(v[s] - v[m.iota[s]]);
    raw.push_back(std::move(v));
    red.push_back(std::move(w));
  }
  return {integer_rank(raw), integer_rank(red)};
}

inline KubotaRank kubota_rank(const GaloisModel& m, const CMType& theta) {
  validate_model(m);
  return kubota_rank_with(m, group_elements(m), theta);
}

// Partition of Sigma into classes; classes[x] = canonical label.
using BlockSystem = std::vector<int>;

// Smallest block system in which all points of `seed` share a block.
inline BlockSystem minimal_block_system(const GaloisModel& m, const std::vector<int>& seed) {
  std::vector<int> parent(m.degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  };
  for (size_t i = 1; i < seed.size(); ++i) unite(seed[0], seed[i]);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& s : m.generators)
      for (int x = 0; x < m.degree; ++x)
        if (unite(s[x], s[find(x)])) changed = true;
  }
  BlockSystem cls(m.degree);
  for (int x = 0; x < m.degree; ++x) cls[x] = find(x);
  return cls;
}

// All block systems of the transitive action, found by growing blocks that
// contain the point 0 one point at a time.
inline std::vector<BlockSystem> block_systems(const GaloisModel& m) {
  std::set<BlockSystem> found;
  std::vector<std::vector<int>> frontier{{0}};
  std::set<std::vector<int>> seen_blocks{{0}};
  found.insert(minimal_block_system(m, {0}));
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& block : frontier) {
      for (int x = 0; x < m.degree; ++x) {
        if (std::binary_search(block.begin(), block.end(), x)) continue;
        auto seed = block;
        seed.push_back(x);
        auto sys = minimal_block_system(m, seed);
        std::vector<int> b;
        for (int y = 0; y < m.degree; ++y)
          if (sys[y] == sys[0]) b.push_back(y);
        found.insert(sys);
        if (seen_blocks.insert(b).second) next.push_back(b);
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline int block_count(const BlockSystem& b) { return static_cast<int>(std::set<int>(b.begin(), b.end()).size()); }

// Proper CM quotient: blocks of size > 1, and iota moves every block.
inline bool is_cm_quotient(const GaloisModel& m, const BlockSystem& b) {
  const int k = block_count(b);
  if (k == m.degree) return false;
  return b[m.iota[0]] != b[0];
}

inline bool is_union_of_blocks(const CMType& theta, const BlockSystem& b) {
  std::set<int> in(theta.begin(), theta.end());
  for (size_t x = 0; x < b.size(); ++x)
    for (size_t y = 0; y < b.size(); ++y)
      if (b[x] == b[y] && in.count(static_cast<int>(x)) != in.count(static_cast<int>(y))) return false;
  return true;
}

inline bool is_primitive_with(const GaloisModel& m, const std::vector<BlockSystem>& systems, const CMType& theta) {
  validate_cm_type(m, theta);
  for (const auto& b : systems)
    if (is_cm_quotient(m, b) && is_union_of_blocks(theta, b)) return false;
  return true;
}

inline bool is_primitive(const GaloisModel& m, const CMType& theta) {
  validate_model(m);
  return is_primitive_with(m, block_systems(m), theta);
}

// The action on the blocks of a CM block system, with the induced CM type.
struct Quotient {
  GaloisModel model;
  CMType theta;
};

inline Quotient quotient(const GaloisModel& m, const BlockSystem& b, const CMType& theta) {
  std::map<int, int> label;
  for (int x : b)
    if (!label.count(x)) label.emplace(x, 0);
  int next = 0;
  for (auto& [k, v] : label) v = next++;
  auto image = [&](const Perm& p) {
    Perm q(next);
    for (int x = 0; x < m.degree; ++x) q[label[b[x]]] = label[b[p[x]]];
    return q;
  };
  Quotient out;
  out.model.degree = next;
  for (const auto& s : m.generators) out.model.generators.push_back(image(s));
  out.model.iota = image(m.iota);
  std::set<int> t;
  for (int x : theta) t.insert(label[b[x]]);
  out.theta.assign(t.begin(), t.end());
  return out;
}

struct RankBound {
  std::uint64_t two_n;
  unsigned ceil_log2;  // least r with 2^r >= 2n
};

inline RankBound rank_lower_bound(std::uint64_t n) {
  if (n < 1) throw PreconditionError("n must be positive");
  return {2 * n, numth::ceil_log2(2 * n)};
}

struct TankeevFamily {
  std::string family;  // "2p" or "4p": degree of the CM field relative to p
  std::uint64_t p;
  int threshold;  // 2p - 1
};

struct ScanEntry {
  CMType theta;
  bool primitive;
  KubotaRank rank;
  std::vector<bool> raw_meets, reduced_meets;  // per family
};

struct ScanReport {
  int degree;
  std::vector<TankeevFamily> families;
  std::vector<ScanEntry> entries;
  int primitive_count = 0;
  int non_primitive_count = 0;
};

inline ScanReport tankeev_scan(const GaloisModel& m, unsigned jobs = 1) {
  validate_model(m);
  auto types = enumerate_cm_types(m);
  auto elems = group_elements(m);
  auto systems = block_systems(m);
  ScanReport rep;
  rep.degree = m.degree;
  const std::uint64_t g = m.g();
  if (g % 2 == 1 && numth::is_prime(g)) rep.families.push_back({"2p", g, static_cast<int>(2 * g - 1)});
  if (g % 2 == 0 && g / 2 % 2 == 1 && numth::is_prime(g / 2))
    rep.families.push_back({"4p", g / 2, static_cast<int>(g - 1)});

  auto one = [&](const CMType& t) {
    ScanEntry e{t, is_primitive_with(m, systems, t), kubota_rank_with(m, elems, t), {}, {}};
    for (const auto& f : rep.families) {
      e.raw_meets.push_back(e.rank.raw >= f.threshold);
      e.reduced_meets.push_back(e.rank.reduced >= f.threshold);
    }
    return e;
  };
  rep.entries.resize(types.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < types.size(); ++i) rep.entries[i] = one(types[i]);
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned j = 0; j < jobs; ++j)
      tasks.push_back(std::async(std::launch::async, [&, j] {
        for (size_t i = j; i < types.size(); i += jobs) rep.entries[i] = one(types[i]);
      }));
    for (auto& t : tasks) t.get();
  }
  for (const auto& e : rep.entries) (e.primitive ? rep.primitive_count : rep.non_primitive_count)++;
  return rep;
}

// Model builders. Each regular model acts on the group itself by left translation.
inline GaloisModel cyclic_model(int n, int iota_shift) {
  GaloisModel m;
  m.degree = n;
  Perm r(n), i(n);
  for (int x = 0; x < n; ++x) {
    r[x] = (x + 1) % n;
    i[x] = ((x + iota_shift) % n + n) % n;
  }
  m.generators = {r};
  m.iota = i;
  return m;
}

// Z/a1 x ... x Z/ak, elements in mixed radix (first factor fastest).
inline GaloisModel abelian_model(const std::vector<int>& factors, const std::vector<int>& iota_elem) {
  if (factors.empty() || factors.size() != iota_elem.size()) throw ModelError("abelian model needs one iota coordinate per factor");
  int n = 1;
  for (int f : factors) {
    if (f < 1) throw ModelError("invariant factors must be positive");
    n *= f;
  }
  auto decode = [&](int x) {
    std::vector<int> c;
    for (int f : factors) {
      c.push_back(x % f);
      x /= f;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int x = 0;
    for (size_t i = factors.size(); i-- > 0;) x = x * factors[i] + ((c[i] % factors[i]) + factors[i]) % factors[i];
    return x;
  };
  auto translation = [&](const std::vector<int>& by) {
    Perm p(n);
    for (int x = 0; x < n; ++x) {
      auto c = decode(x);
      for (size_t i = 0; i < c.size(); ++i) c[i] += by[i];
      p[x] = encode(c);
    }
    return p;
  };
  GaloisModel m;
  m.degree = n;
  for (size_t i = 0; i < factors.size(); ++i) {
    std::vector<int> e(factors.size(), 0);
    e[i] = 1;
    m.generators.push_back(translation(e));
  }
  m.iota = translation(iota_elem);
  return m;
}

// Dihedral group of order 2n acting on itself; element r^i s^e has index i + n e.
// iota is the rotation r^k (central when 2k = n).
inline GaloisModel dihedral_model(int n, int iota_rotation) {
  if (n < 1) throw ModelError("dihedral order must be positive");
  const int size = 2 * n;
  auto idx = [n](int i, int e) { return ((i % n) + n) % n + n * (e % 2); };
  Perm r(size), s(size), io(size);
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < 2; ++e) {
      r[idx(i, e)] = idx(i + 1, e);       // r * r^i s^e
      s[idx(i, e)] = idx(-i, e + 1);      // s r^i s^e = r^-i s^(e+1)
      io[idx(i, e)] = idx(i + iota_rotation, e);
    }
  GaloisModel m;
  m.degree = size;
  m.generators = {r, s};
  m.iota = io;
  return m;
}

// Cycle notation such as "(0 1 2)(3 4 5)" on points 0..degree-1.
inline Perm parse_cycles(const std::string& text, int degree) {
  Perm p = identity_perm(degree);
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ModelError("expected '(' in cycle notation");
    size_t close = text.find(')', i);
    if (close == std::string::npos) throw ModelError("unterminated cycle");
    std::istringstream in(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    for (std::string tok; in >> tok;) {
      for (char& c : tok)
        if (c == ',') c = ' ';
      std::istringstream t(tok);
      for (int v; t >> v;) cyc.push_back(v);
    }
    for (int v : cyc)
      if (v < 0 || v >= degree) throw ModelError("cycle point out of range");
    for (size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
    i = close + 1;
  }
  if (!is_permutation(p)) throw ModelError("cycles are not disjoint");
  return p;
}

}  // namespace hodge::cm
