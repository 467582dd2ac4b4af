#pragma once

// Shapes of the dimension-2p grid shared by the classifier tests and the
// acceptance binary.

#include <sstream>
#include <string>
#include <vector>

#include "hodge/classifier.hpp"

namespace grid {

using namespace hodge;

struct Shape {
  int p;
  AlbertType type;
  int deg_L;
  Parity parity;
};

inline std::optional<std::vector<TracePair>> traces(int p, int deg_L) {
  if (deg_L == 2) return std::vector<TracePair>{{p, p}};
  if (deg_L == 4) return std::vector<TracePair>{{1, p - 1}, {p - 1, 1}};
  if (deg_L == 2 * p) {
    std::vector<TracePair> t((p - 1) / 2, {2, 0});
    t.insert(t.end(), (p - 1) / 2, {0, 2});
    t.push_back({1, 1});
    return t;
  }
  return std::nullopt;
}

inline HodgeProfile profile(const Shape& s) {
  EndomorphismDescriptor e;
  e.type = s.type;
  e.deg_L = s.deg_L;
  switch (s.type) {
    case AlbertType::I:
      e.deg_F = s.deg_L;
      e.disc_one = false;
      break;
    case AlbertType::II:
    case AlbertType::III:
      e.deg_F = s.deg_L / 4;
      e.q = 2;
      e.disc_one = false;
      break;
    case AlbertType::IV:
      e.deg_F = s.deg_L / 2;
      e.cm_traces = traces(s.p, s.deg_L);
      break;
  }
  return {s.parity == Parity::odd ? 1 : 2, 2 * s.p, e};
}

inline std::vector<SubfieldDescriptor> subfields(const Shape& s) {
  if (s.type != AlbertType::IV) return {};
  SubfieldDescriptor e{2, true, std::nullopt};
  if (s.deg_L == 4 * s.p) e.galois_L = true;
  return {e};
}

// Every valid, definitely realizable shape for p in {3, 5, 7}.
inline std::vector<Shape> shapes() {
  std::vector<Shape> out;
  for (int p : {3, 5, 7})
    for (auto t : {AlbertType::I, AlbertType::II, AlbertType::III, AlbertType::IV})
      for (int d = 1; d <= 8 * p; ++d)
        for (auto par : {Parity::odd, Parity::even}) {
          if (t != AlbertType::I && d % (t == AlbertType::IV ? 2 : 4)) continue;
          Shape s{p, t, d, par};
          auto prof = profile(s);
          if (!validate_profile(prof).empty()) continue;
          auto r = realizable(prof);
          if (r.realizable && *r.realizable) out.push_back(s);
        }
  return out;
}

inline std::string describe(const Shape& s, const GroupExpr& g) {
  std::ostringstream o;
  o << "p=" << s.p << " type=" << to_string(s.type) << " deg_L=" << s.deg_L << " parity=" << to_string(s.parity)
    << " -> " << to_string(g.family) << " base=" << g.base_degree << " size=" << g.size;
  if (g.family == Family::torus_su_le) o << " codim=" << g.codim;
  return o.str();
}

// One line per shape; a shape whose outcome is not a single determined
// candidate is reported as such so the golden comparison fails loudly.
inline std::vector<std::string> lines() {
  std::vector<std::string> out;
  for (const auto& s : shapes()) {
    auto o = classify(profile(s), subfields(s));
    if (o.status != Status::determined || o.candidates.size() != 1)
      out.push_back("p=" + std::to_string(s.p) + " unexpected outcome " + std::string(to_string(o.status)));
    else
      out.push_back(describe(s, o.candidates[0].group));
  }
  return out;
}

}  // namespace grid
