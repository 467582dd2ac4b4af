#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hodge/classifier.hpp"
#include "hodge/cmtools.hpp"
#include "hodge/consequences.hpp"
#include "hodge/core.hpp"
#include "hodge/lefschetz.hpp"
#include "hodge/numth.hpp"
#include "hodge/realizability.hpp"
#include "hodge/rootsys.hpp"

namespace hodge::cli {

using Json = nlohmann::ordered_json;

enum Exit { ok = 0, bad_input = 2, negative = 3, internal = 4, undetermined = 5 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON (byte ") + std::to_string(e.byte) + "): " + e.what());
  }
}

namespace detail {

inline void only_keys(const Json& j, std::initializer_list<std::string_view> keys, const std::string& where) {
  if (!j.is_object()) throw InputError(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
      throw InputError("unknown field '" + it.key() + "' in " + where);
}

inline int get_int(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "' in " + where);
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  auto x = v.get<std::int64_t>();
  if (x < -1000000000 || x > 1000000000) throw InputError(std::string("field '") + key + "' out of range");
  return static_cast<int>(x);
}

inline std::optional<bool> get_opt_bool(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_boolean()) throw InputError(std::string("field '") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace detail

inline EndomorphismDescriptor endo_from_json(const Json& j) {
  detail::only_keys(j, {"type", "deg_L", "deg_F", "q", "cm_traces", "disc_one"}, "endo");
  EndomorphismDescriptor e;
  if (!j.contains("type") || !j.at("type").is_string()) throw InputError("endo.type must be a string");
  auto t = parse_albert_type(j.at("type").get<std::string>());
  if (!t) throw InputError("endo.type must be one of I, II, III, IV");
  e.type = *t;
  e.deg_L = detail::get_int(j, "deg_L", "endo");
  e.deg_F = detail::get_int(j, "deg_F", "endo");
  e.q = detail::get_int(j, "q", "endo");
  if (j.contains("cm_traces") && !j.at("cm_traces").is_null()) {
    const auto& a = j.at("cm_traces");
    if (!a.is_array()) throw InputError("cm_traces must be an array of pairs");
    std::vector<TracePair> tr;
    for (const auto& pr : a) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() || !pr[1].is_number_integer())
        throw InputError("each cm_traces entry must be a pair of integers");
      tr.emplace_back(pr[0].get<int>(), pr[1].get<int>());
    }
    e.cm_traces = std::move(tr);
  }
  e.disc_one = detail::get_opt_bool(j, "disc_one");
  return e;
}

inline HodgeProfile profile_from_json(const Json& j) {
  detail::only_keys(j, {"weight", "n", "endo"}, "profile");
  HodgeProfile p;
  p.weight = detail::get_int(j, "weight", "profile");
  p.n = detail::get_int(j, "n", "profile");
  if (!j.contains("endo")) throw InputError("missing field 'endo' in profile");
  p.endo = endo_from_json(j.at("endo"));
  return p;
}

inline Json to_json(const EndomorphismDescriptor& e) {
  Json j;
  j["type"] = std::string(to_string(e.type));
  j["deg_L"] = e.deg_L;
  j["deg_F"] = e.deg_F;
  j["q"] = e.q;
  if (e.cm_traces) {
    Json a = Json::array();
    for (auto [x, y] : *e.cm_traces) a.push_back(Json::array({x, y}));
    j["cm_traces"] = a;
  }
  if (e.disc_one) j["disc_one"] = *e.disc_one;
  return j;
}

inline Json to_json(const HodgeProfile& p) {
  Json j;
  j["weight"] = p.weight;
  j["n"] = p.n;
  j["endo"] = to_json(p.endo);
  return j;
}

inline SubfieldDescriptor subfield_from_json(const Json& j) {
  detail::only_keys(j, {"deg_E", "balanced", "galois_L"}, "subfield");
  SubfieldDescriptor s;
  s.deg_E = detail::get_int(j, "deg_E", "subfield");
  if (!j.contains("balanced") || !j.at("balanced").is_boolean()) throw InputError("subfield.balanced must be a boolean");
  s.balanced = j.at("balanced").get<bool>();
  s.galois_L = detail::get_opt_bool(j, "galois_L");
  return s;
}

inline std::vector<SubfieldDescriptor> subfields_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("subfields must be an array");
  std::vector<SubfieldDescriptor> out;
  for (const auto& x : j) out.push_back(subfield_from_json(x));
  return out;
}

inline Json to_json(const SubfieldDescriptor& s) {
  Json j;
  j["deg_E"] = s.deg_E;
  j["balanced"] = s.balanced;
  if (s.galois_L) j["galois_L"] = *s.galois_L;
  return j;
}

inline Json to_json(const GroupExpr& g) {
  Json j;
  j["family"] = std::string(to_string(g.family));
  j["base_degree"] = g.base_degree;
  j["size"] = g.size;
  j["rep"] = std::string(to_string(g.rep));
  if (g.rep == Rep::exterior_power) j["exterior"] = g.exterior;
  if (g.family == Family::torus_su_le) j["codim"] = g.codim;
  j["label"] = label(g);
  j["dim"] = group_dim(g);
  j["rank"] = group_rank(g);
  return j;
}

inline Json to_json(const ClassificationOutcome& o) {
  Json j;
  j["status"] = std::string(to_string(o.status));
  j["applied_rule"] = o.applied_rule;
  Json cs = Json::array();
  for (const auto& c : o.candidates) {
    Json x;
    x["group"] = to_json(c.group);
    x["condition"] = c.condition;
    x["occurs"] = std::string(to_string(c.occurs));
    cs.push_back(x);
  }
  j["candidates"] = cs;
  j["notes"] = o.notes;
  return j;
}

inline Json to_json(const std::vector<Table3Row>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json x;
    x["type"] = r.type;
    x["deg_L"] = r.deg_L;
    x["odd"] = r.odd;
    x["even"] = r.even;
    x["lefschetz"] = r.lefschetz;
    a.push_back(x);
  }
  Json j;
  j["n"] = 4;
  j["rows"] = a;
  return j;
}

inline std::string table3_markdown(const std::vector<Table3Row>& rows) {
  std::ostringstream s;
  s << "| L | [L:Q] | Odd weight | Even weight | Equal to Lefschetz |\n";
  s << "|---|---|---|---|---|\n";
  for (const auto& r : rows)
    s << "| " << r.type << " | " << r.deg_L << " | " << r.odd << " | " << r.even << " | "
      << (r.lefschetz ? "Yes" : "No") << " |\n";
  return s.str();
}

inline Json to_json(const Realizability& r) {
  Json j;
  j["realizable"] = detail::opt(r.realizable);
  if (r.match) {
    Json c;
    c["parity"] = std::string(to_string(r.match->kase.parity));
    c["index"] = r.match->kase.index;
    c["description"] = std::string(r.match->kase.description);
    c["conditional"] = r.match->conditional;
    j["case"] = c;
  }
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e;
    e["code"] = std::string(to_string(x.code));
    e["message"] = x.message;
    v.push_back(e);
  }
  j["violations"] = v;
  j["reason"] = r.reason;
  return j;
}

inline AbelianProfile abelian_from_json(const Json& j) {
  detail::only_keys(j, {"dim", "endo", "subfields"}, "abelian profile");
  AbelianProfile a;
  a.dim = detail::get_int(j, "dim", "abelian profile");
  if (!j.contains("endo")) throw InputError("missing field 'endo' in abelian profile");
  a.endo = endo_from_json(j.at("endo"));
  if (j.contains("subfields")) a.subfields = subfields_from_json(j.at("subfields"));
  return a;
}

inline Json to_json(const MurtyVerdict& m, const HodgeStatus& s) {
  Json j;
  j["murty_equal"] = detail::opt(m.equal);
  j["murty_rationale"] = m.rationale;
  j["divisor_weil_generated"] = detail::opt(s.divisor_weil_generated);
  j["hc_all_powers"] = std::string(to_string(s.hc_all_powers));
  j["ghc_reduction"] = s.ghc_reduction;
  j["ghc_all_powers"] = std::string(to_string(s.ghc_all_powers));
  j["rationale"] = s.rationale;
  return j;
}

namespace detail {

inline std::string big(const rootsys::BigInt& x) { return x.str(); }

inline Json number_or_string(const rootsys::BigInt& x) {
  if (x <= std::numeric_limits<std::int64_t>::max()) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("expected a comma-separated integer list, got '" + s + "'");
    }
  }
  return out;
}

inline std::string read_all(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), {}};
}

inline cm::GaloisModel build_model(const std::string& spec, const std::string& iota) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("group spec must look like kind:params");
  const std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  if (kind == "cyclic" || kind == "dihedral") {
    auto v = parse_int_list(rest);
    if (v.size() != 1 || v[0] < 1) throw InputError("expected " + kind + ":N");
    const int n = v[0];
    int shift = n / 2;
    if (!iota.empty()) {
      auto s = parse_int_list(iota);
      if (s.size() != 1) throw InputError("iota must be a single integer for " + kind);
      shift = s[0];
    }
    return kind == "cyclic" ? cm::cyclic_model(n, shift) : cm::dihedral_model(n, shift);
  }
  if (kind == "abelian") {
    if (iota.empty()) throw InputError("abelian groups need --iota");
    return cm::abelian_model(parse_int_list(rest), parse_int_list(iota));
  }
  if (kind == "perm") {
    auto c2 = rest.find(':');
    if (c2 == std::string::npos) throw InputError("expected perm:DEGREE:GEN;GEN");
    auto deg = parse_int_list(rest.substr(0, c2));
    if (deg.size() != 1 || deg[0] < 1) throw InputError("bad permutation degree");
    cm::GaloisModel m;
    m.degree = deg[0];
    std::stringstream gens(rest.substr(c2 + 1));
    for (std::string g; std::getline(gens, g, ';');) m.generators.push_back(cm::parse_cycles(g, m.degree));
    if (iota.empty()) throw InputError("permutation groups need --iota");
    m.iota = cm::parse_cycles(iota, m.degree);
    return m;
  }
  throw InputError("unknown group kind '" + kind + "'");
}

inline Json theta_json(const cm::CMType& t) { return Json(t); }

}  // namespace detail

// Dispatches one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hodge group classification for Hodge numbers (n,0,...,0,n)", "hodgecli"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output");

  std::string profile_path, subfields_path;
  auto add_profile = [&](CLI::App* c) { c->add_option("--profile", profile_path, "JSON file, - for stdin"); };

  auto* validate = app.add_subcommand("validate", "structural validation of a profile");
  add_profile(validate);
  auto* realize = app.add_subcommand("realizable", "exceptional-case test");
  add_profile(realize);
  auto* lefs = app.add_subcommand("lefschetz", "Lefschetz group");
  add_profile(lefs);
  auto* classify_cmd = app.add_subcommand("classify", "possible Hodge groups");
  add_profile(classify_cmd);
  bool table3 = false;
  classify_cmd->add_flag("--table3", table3, "regenerate the n = 4 table");
  classify_cmd->add_option("--subfields", subfields_path, "JSON array of CM subfields");
  classify_cmd->add_flag("--pretty", pretty);

  auto* weights = app.add_subcommand("weights", "root systems and minuscule weights");
  weights->require_subcommand(1);
  int max_rank = 10;
  auto* wt2 = weights->add_subcommand("verify-table2", "check every minuscule row");
  wt2->add_option("--max-rank", max_rank)->check(CLI::Range(1, 16));
  std::string wkind, wcoords;
  int wrank = 0;
  auto weight_args = [&](CLI::App* c) {
    c->add_option("kind", wkind)->required();
    c->add_option("rank", wrank)->required();
    c->add_option("coords", wcoords)->required();
  };
  auto* wdim = weights->add_subcommand("dim", "Weyl dimension");
  weight_args(wdim);
  auto* wdual = weights->add_subcommand("autodual", "autoduality of a minuscule weight");
  weight_args(wdual);
  auto* wlen = weights->add_subcommand("length", "length of a dominant weight");
  weight_args(wlen);

  auto* cmc = app.add_subcommand("cm", "CM types and Kubota ranks");
  cmc->require_subcommand(1);
  std::string group_spec, iota_spec, theta_spec;
  unsigned jobs = 1;
  auto cm_args = [&](CLI::App* c, bool theta) {
    c->add_option("--group", group_spec, "cyclic:N | dihedral:N | abelian:a,b | perm:DEG:GENS")->required();
    c->add_option("--iota", iota_spec, "complex conjugation");
    if (theta) c->add_option("--theta", theta_spec, "comma-separated CM type")->required();
  };
  auto* cscan = cmc->add_subcommand("scan", "all CM types");
  cm_args(cscan, false);
  cscan->add_option("--jobs", jobs)->check(CLI::Range(1u, 64u));
  auto* crank = cmc->add_subcommand("rank", "Kubota rank of one CM type");
  cm_args(crank, true);
  auto* cprim = cmc->add_subcommand("primitive", "primitivity of one CM type");
  cm_args(cprim, true);

  auto* nt = app.add_subcommand("numth", "binomial and prime checks");
  nt->require_subcommand(1);
  unsigned k_max = 10, gap_max = 20;
  auto* ntv = nt->add_subcommand("verify", "run all arithmetic checks");
  ntv->add_option("--k-max", k_max)->check(CLI::Range(3u, 24u));
  ntv->add_option("--gap-max", gap_max)->check(CLI::Range(3u, 26u));

  auto* ab = app.add_subcommand("abelian", "Hodge conjecture bookkeeping in dimension 2p");
  ab->require_subcommand(1);
  auto* abs = ab->add_subcommand("status", "Murty group and HC/GHC status");
  add_profile(abs);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return bad_input;
  }

  auto emit = [&](const Json& j) { out << j.dump(2) << "\n"; };
  auto profile = [&] { return profile_from_json(parse_json(detail::read_all(profile_path, in))); };

  try {
    if (*validate) {
      auto p = profile();
      auto v = validate_profile(p);
      Json j;
      j["valid"] = v.empty();
      j["violations"] = to_json(Realizability{std::nullopt, std::nullopt, v, ""})["violations"];
      emit(j);
      return v.empty() ? ok : negative;
    }
    if (*realize) {
      auto p = profile();
      auto r = realizable(p);
      emit(to_json(r));
      if (!r.violations.empty()) return internal;
      if (!r.realizable) return undetermined;
      return *r.realizable ? ok : negative;
    }
    if (*lefs) {
      auto p = profile();
      auto v = validate_profile(p);
      if (!v.empty()) throw InputError("invalid profile: " + v.front().message);
      Json j;
      j["group"] = to_json(lefschetz_group(p));
      j["dim"] = group_dim(lefschetz_group(p));
      j["rank"] = group_rank(lefschetz_group(p));
      emit(j);
      return ok;
    }
    if (*classify_cmd) {
      if (table3) {
        auto rows = table3_rows();
        if (pretty)
          out << table3_markdown(rows);
        else
          emit(to_json(rows));
        return ok;
      }
      auto p = profile();
      auto v = validate_profile(p);
      if (!v.empty()) throw InputError("invalid profile: " + v.front().message);
      std::vector<SubfieldDescriptor> subs;
      if (!subfields_path.empty()) {
        if (subfields_path == "-" && (profile_path.empty() || profile_path == "-"))
          throw InputError("profile and subfields cannot both come from stdin");
        subs = subfields_from_json(parse_json(detail::read_all(subfields_path, in)));
      }
      auto r = realizable(p);
      if (r.realizable && !*r.realizable) {
        emit(to_json(r));
        return negative;
      }
      auto o = classify(p, subs);
      if (pretty) {
        out << "status: " << to_string(o.status) << "\nrule: " << o.applied_rule << "\n";
        for (const auto& c : o.candidates)
          out << "  " << label(c.group) << " [" << to_string(c.occurs) << "]"
              << (c.condition.empty() ? "" : " if " + c.condition) << "\n";
        for (const auto& n : o.notes) out << "note: " << n << "\n";
      } else {
        emit(to_json(o));
      }
      return ok;
    }
    if (*wt2) {
      auto rep = rootsys::verify_table2(max_rank);
      Json rows = Json::array();
      for (const auto& c : rep.checks) {
        Json x;
        x["kind"] = std::string(rootsys::to_string(c.expected.kind));
        x["rank"] = c.expected.rank;
        x["j"] = c.expected.j;
        x["dimension"] = detail::number_or_string(c.dimension);
        x["expected_dimension"] = detail::number_or_string(c.expected.dimension);
        x["duality"] = std::string(rootsys::to_string(c.duality));
        x["expected_duality"] = std::string(rootsys::to_string(c.expected.duality));
        x["minuscule"] = c.minuscule;
        x["ok"] = c.ok;
        rows.push_back(x);
      }
      Json j;
      j["max_rank"] = max_rank;
      j["all_ok"] = rep.all_ok;
      j["set_mismatches"] = rep.set_mismatches;
      j["rows"] = rows;
      emit(j);
      return rep.all_ok ? ok : negative;
    }
    if (*wdim || *wdual || *wlen) {
      auto kind = rootsys::parse_kind(wkind);
      if (!kind) throw InputError("unknown root system kind '" + wkind + "'");
      if (!rootsys::rank_allowed(*kind, wrank)) throw InputError("rank not allowed for this kind");
      auto rs = rootsys::make_root_system(*kind, wrank);
      rootsys::Weight w{detail::parse_int_list(wcoords)};
      rootsys::check_weight(rs, w);
      if (*wdim) {
        if (pretty) {
          out << rootsys::rep_dimension(rs, w).str() << "\n";
        } else {
          Json j;
          j["kind"] = wkind;
          j["rank"] = rs.rank;
          j["weight"] = w.coords;
          j["dimension"] = detail::number_or_string(rootsys::rep_dimension(rs, w));
          emit(j);
        }
      } else if (*wdual) {
        Json j;
        j["kind"] = wkind;
        j["rank"] = rs.rank;
        j["weight"] = w.coords;
        j["minuscule"] = rootsys::is_dominant(w) && rootsys::is_minuscule(rs, w);
        j["duality"] = j["minuscule"].get<bool>() ? Json(std::string(rootsys::to_string(rootsys::autoduality(rs, w))))
                                                  : Json(nullptr);
        emit(j);
      } else {
        Json j;
        j["kind"] = wkind;
        j["rank"] = rs.rank;
        j["weight"] = w.coords;
        j["length"] = rootsys::weight_length(rs, w).str();
        emit(j);
      }
      return ok;
    }
    if (*cscan || *crank || *cprim) {
      auto m = detail::build_model(group_spec, iota_spec);
      cm::validate_model(m);
      if (*cscan) {
        auto rep = cm::tankeev_scan(m, jobs);
        Json fam = Json::array();
        for (const auto& f : rep.families) {
          Json x;
          x["family"] = f.family;
          x["p"] = f.p;
          x["threshold"] = f.threshold;
          fam.push_back(x);
        }
        Json entries = Json::array();
        for (const auto& e : rep.entries) {
          Json x;
          x["theta"] = detail::theta_json(e.theta);
          x["primitive"] = e.primitive;
          x["raw"] = e.rank.raw;
          x["reduced"] = e.rank.reduced;
          x["raw_meets"] = e.raw_meets;
          x["reduced_meets"] = e.reduced_meets;
          entries.push_back(x);
        }
        Json j;
        j["degree"] = rep.degree;
        j["families"] = fam;
        j["primitive_count"] = rep.primitive_count;
        j["non_primitive_count"] = rep.non_primitive_count;
        j["entries"] = entries;
        emit(j);
        return ok;
      }
      cm::CMType theta = detail::parse_int_list(theta_spec);
      std::sort(theta.begin(), theta.end());
      cm::validate_cm_type(m, theta);
      Json j;
      j["theta"] = detail::theta_json(theta);
      if (*crank) {
        auto r = cm::kubota_rank(m, theta);
        j["raw"] = r.raw;
        j["reduced"] = r.reduced;
        j["bound"] = cm::rank_lower_bound(static_cast<std::uint64_t>(m.g())).ceil_log2;
      } else {
        j["primitive"] = cm::is_primitive(m, theta);
      }
      emit(j);
      return ok;
    }
    if (*ntv) {
      bool all = true;
      Json j;
      j["k_max"] = k_max;
      bool mod4 = true;
      for (std::uint64_t z = 1; z <= 4096; ++z)
        mod4 &= (numth::central_binomial_mod4(z) == 2) == numth::is_power_of_two(z);
      j["mod4_power_of_two"] = {{"limit", 4096}, {"ok", mod4}};
      all &= mod4;
      auto rep = numth::no_prime_double_is_central_binomial(k_max);
      Json w = Json::array();
      for (const auto& x : rep.witnesses) {
        Json e;
        e["k"] = x.k;
        e["half_binomial"] = numth::format_factorization(x.factors);
        e["composite"] = x.composite;
        w.push_back(e);
      }
      j["half_binomial_composite"] = {{"all_composite", rep.all_composite}, {"witnesses", w}};
      all &= rep.all_composite;
      Json gaps = Json::array();
      bool gaps_ok = true;
      for (unsigned k = 3; k <= gap_max; ++k) {
        auto g = numth::prime_count_gap(k);
        gaps_ok &= g >= 2;
        gaps.push_back({{"k", k}, {"gap", g}});
      }
      j["prime_gaps"] = {{"gap_max", gap_max}, {"ok", gaps_ok}, {"gaps", gaps}};
      all &= gaps_ok;
      j["ok"] = all;
      emit(j);
      return all ? ok : negative;
    }
    if (*abs) {
      auto a = abelian_from_json(parse_json(detail::read_all(profile_path, in)));
      auto m = murty_equal(a);
      emit(to_json(m, hodge_status(a)));
      return ok;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  }
  return bad_input;
}

}  // namespace hodge::cli
